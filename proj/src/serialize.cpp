#include "detstrat/serialize.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace detstrat {

Json to_json(const Integer& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j)
{
    if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
    return Partition(j.get<std::vector<int>>());
}

Json to_json(const std::vector<Partition>& ps)
{
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(to_json(p));
    return out;
}

Json to_json(const LaurentPoly& p)
{
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(to_json(c));
    return Json{{"min_exp", p.min_exponent()}, {"coeffs", std::move(coeffs)}};
}

LaurentPoly poly_from_json(const Json& j)
{
    std::vector<Integer> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(integer_from_json(c));
    return LaurentPoly(j.at("min_exp").get<int>(), std::move(coeffs));
}

Json params_json(const SpaceSpec& space)
{
    if (space.family() == Family::General) return Json{{"m", space.m()}, {"n", space.n()}};
    return Json{{"n", space.n()}};
}

Json table_json(const SpaceSpec& space, std::string_view kind, const StrataMatrix& m)
{
    Json rows = Json::array();
    for (const auto& row : m.rows()) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(to_json(v));
        rows.push_back(std::move(r));
    }
    return Json{{"family", std::string(family_name(space.family()))},
                {"params", params_json(space)},
                {"kind", std::string(kind)},
                {"order", m.order()},
                {"rows", std::move(rows)}};
}

StrataMatrix matrix_from_table_json(const Json& j)
{
    std::vector<std::vector<Integer>> rows;
    for (const auto& row : j.at("rows")) {
        auto& r = rows.emplace_back();
        for (const auto& v : row) r.push_back(integer_from_json(v));
    }
    if (rows.size() != j.at("order").get<std::size_t>())
        throw std::invalid_argument("table order does not match row count");
    return StrataMatrix(rows);
}

Json ic_table_json(const SpaceSpec& space, const std::vector<LaurentPoly>& polys)
{
    Json list = Json::array();
    for (std::size_t p = 0; p < polys.size(); ++p) {
        Json entry{{"p", p}};
        const Json poly = to_json(polys[p]);
        entry["min_exp"] = poly["min_exp"];
        entry["coeffs"] = poly["coeffs"];
        list.push_back(std::move(entry));
    }
    return Json{{"family", std::string(family_name(space.family()))},
                {"params", params_json(space)},
                {"kind", "ic"},
                {"polys", std::move(list)}};
}

std::string render_text(const StrataMatrix& m)
{
    std::size_t width = 1;
    for (const auto& row : m.rows())
        for (const auto& v : row) width = std::max(width, v.str().size());
    std::ostringstream os;
    for (const auto& row : m.rows()) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            const std::string s = row[j].str();
            if (j) os << ' ';
            os << std::string(width - s.size(), ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

std::string render_csv(const StrataMatrix& m)
{
    std::ostringstream os;
    for (std::size_t j = 0; j < m.order(); ++j) os << (j ? "," : "") << j;
    os << '\n';
    for (const auto& row : m.rows()) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j];
        os << '\n';
    }
    return os.str();
}

std::string render_csv(const LaurentPoly& p)
{
    std::ostringstream os;
    os << "exponent,coefficient\n";
    for (std::size_t k = 0; k < p.coefficients().size(); ++k)
        if (p.coefficients()[k] != 0) os << p.min_exponent() + static_cast<int>(k) << ',' << p.coefficients()[k] << '\n';
    return os.str();
}

}  // namespace detstrat
