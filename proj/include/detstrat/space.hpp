#pragma once

#include <string>
#include <string_view>

namespace detstrat {

enum class Family { General, Symmetric, Skew };

std::string_view family_name(Family f);  // "general" | "symm" | "skew"
Family parse_family(std::string_view name);

// One of the matrix spaces X^{m,n}, X^{n,symm}, X^{n,skew} together with its
// rank stratification. For General, m >= n >= 1; Symmetric needs n >= 1;
// Skew needs n >= 2. Strata are indexed 0..max_stratum(); for Skew stratum
// i is the locus of rank 2i.
class SpaceSpec {
public:
    static SpaceSpec general(int m, int n);
    static SpaceSpec symmetric(int n);
    static SpaceSpec skew(int n);

    Family family() const { return family_; }
    int m() const { return m_; }  // equals n() outside the General family
    int n() const { return n_; }

    long long ambient_dimension() const;
    int max_stratum() const;
    int strata_count() const { return max_stratum() + 1; }
    bool valid_stratum(int p) const { return p >= 0 && p <= max_stratum(); }
    // Throws std::invalid_argument unless valid_stratum(p).
    void require_stratum(int p) const;

    // "General(3,2)", "Symmetric(4)", "Skew(5)"
    std::string to_string() const;

    friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;

private:
    SpaceSpec(Family f, int m, int n) : family_(f), m_(m), n_(n) {}

    Family family_;
    int m_;
    int n_;
};

// d_i = dim V_i.
long long stratum_dimension(const SpaceSpec& space, int i);

}  // namespace detstrat
