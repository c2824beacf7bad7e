#include "cli.hpp"

#include "detstrat/characters.hpp"
#include "detstrat/derham.hpp"
#include "detstrat/obstruction.hpp"
#include "detstrat/plethysm.hpp"
#include "detstrat/serialize.hpp"
#include "detstrat/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace detstrat::cli {

namespace {

struct SpaceArgs {
    std::string family;
    std::optional<int> m;
    int n = 0;

    void add_to(CLI::App& cmd)
    {
        cmd.add_option("--family", family, "Matrix space family")
            ->required()
            ->check(CLI::IsMember({"general", "symm", "skew"}));
        cmd.add_option("--m", m, "Row count for general matrices (default: n)");
        cmd.add_option("--n", n, "Matrix size")->required();
    }

    SpaceSpec build() const
    {
        const Family f = parse_family(family);
        if (m && f != Family::General) throw std::invalid_argument("--m only applies to --family general");
        switch (f) {
        case Family::General: return SpaceSpec::general(m.value_or(n), n);
        case Family::Symmetric: return SpaceSpec::symmetric(n);
        case Family::Skew: return SpaceSpec::skew(n);
        }
        throw std::logic_error("unknown family");
    }
};

IntegerWeight parse_weight(const std::string& text)
{
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad weight entry '" + item + "'");
        }
        if (used != item.size()) throw std::invalid_argument("bad weight entry '" + item + "'");
        entries.push_back(v);
    }
    return IntegerWeight(std::move(entries));
}

void print_table(std::ostream& out, const SpaceSpec& space, const std::string& kind,
                 const std::string& format, bool signed_micro_flag, const std::string& method)
{
    if (kind == "ic") {
        std::vector<LaurentPoly> polys;
        for (int p = 0; p <= space.max_stratum(); ++p) polys.push_back(ic_poincare(space, p));
        if (format == "json") {
            out << ic_table_json(space, polys).dump() << '\n';
        } else if (format == "csv") {
            out << "p,exponent,coefficient\n";
            for (std::size_t p = 0; p < polys.size(); ++p)
                for (int e = polys[p].min_exponent(); !polys[p].is_zero() && e <= polys[p].max_exponent(); ++e)
                    if (polys[p].coefficient(e) != 0) out << p << ',' << e << ',' << polys[p].coefficient(e) << '\n';
        } else {
            for (std::size_t p = 0; p < polys.size(); ++p) out << "p=" << p << ": " << polys[p].to_string() << '\n';
        }
        return;
    }

    const Method m = method == "enum" ? Method::Enumerate : Method::Closed;
    StrataMatrix matrix;
    std::string label = kind;
    if (kind == "euler") {
        matrix = m == Method::Closed ? euler_closed(space) : solve_euler(chi_from_enumeration(space), signed_micro(space));
    } else if (kind == "chi") {
        matrix = m == Method::Closed ? chi_closed(space) : chi_from_enumeration(space);
    } else {
        matrix = signed_micro_flag ? signed_micro(space) : micro_indices(space);
        if (signed_micro_flag) label = "signed_micro";
    }

    if (format == "json")
        out << table_json(space, label, matrix).dump() << '\n';
    else if (format == "csv")
        out << render_csv(matrix);
    else
        out << render_text(matrix);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Euler obstructions, IC Euler characteristics and de Rham invariants of "
                 "determinantal stratifications",
                 "detstrat"};
    app.require_subcommand(1);

    SpaceArgs space_args;
    std::string kind;
    std::string format = "text";
    std::string method;
    bool signed_flag = false;
    bool check = false;
    int p = 0;
    int i = 0;
    int max_n = 0;
    std::optional<int> m_opt;
    int n = 0;
    std::string weight;

    auto* table = app.add_subcommand("table", "Print a strata matrix or the IC Poincare polynomials");
    space_args.add_to(*table);
    table->add_option("--kind", kind, "euler | chi | micro | ic")
        ->required()
        ->check(CLI::IsMember({"euler", "chi", "micro", "ic"}));
    table->add_option("--format", format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
    table->add_flag("--signed", signed_flag, "With --kind micro: print (-1)^{d_i} m_{i,j}");
    table->add_option("--method", method, "closed | enum: how chi (and euler) are obtained")
        ->check(CLI::IsMember({"closed", "enum"}));

    auto* derham = app.add_subcommand("derham", "Invariant de Rham generating function of D_p");
    space_args.add_to(*derham);
    derham->add_option("--p", p, "Stratum index")->required();
    derham->add_option("--method", method, "enum | closed | both")->check(CLI::IsMember({"enum", "closed", "both"}));
    derham->add_flag("--check", check, "Exit 1 if the two methods disagree");

    auto* plethysm = app.add_subcommand("plethysm", "Partitions indexing an exterior power");
    plethysm->add_option("--kind", kind, "cauchy | symm | skew")
        ->required()
        ->check(CLI::IsMember({"cauchy", "symm", "skew"}));
    plethysm->add_option("--n", n, "dim F (dim F2 for cauchy)")->required();
    plethysm->add_option("--m", m_opt, "dim F1 for cauchy (default: n)");
    plethysm->add_option("--i", i, "Exterior degree")->required();

    auto* character = app.add_subcommand("character", "Multiplicity of a weight in the character of D_p");
    space_args.add_to(*character);
    character->add_option("--p", p, "Stratum index")->required();
    character->add_option("--weight", weight, "Comma-separated dominant weight of length n")->required();

    auto* verify = app.add_subcommand("verify", "Check enumeration against the closed forms");
    verify->add_option("--family", space_args.family, "Matrix space family")
        ->required()
        ->check(CLI::IsMember({"general", "symm", "skew"}));
    verify->add_option("--max", max_n, "Largest matrix size")->required()->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    try {
        if (table->parsed()) {
            if (signed_flag && kind != "micro") throw std::invalid_argument("--signed only applies to --kind micro");
            if (!method.empty() && kind != "chi" && kind != "euler")
                throw std::invalid_argument("--method only applies to --kind chi or euler");
            print_table(out, space_args.build(), kind, format, signed_flag, method.empty() ? "closed" : method);
            return exit_ok;
        }
        if (derham->parsed()) {
            const SpaceSpec space = space_args.build();
            space.require_stratum(p);
            const std::string how = method.empty() ? "both" : method;
            if (check && how != "both") throw std::invalid_argument("--check needs --method both");
            std::optional<LaurentPoly> e, c;
            if (how != "closed") e = inv_derham_gf_enum(space, p);
            if (how != "enum") c = inv_derham_gf_closed(space, p);
            if (e) out << "enum: " << e->to_string() << '\n';
            if (c) out << "closed: " << c->to_string() << '\n';
            if (check && *e != *c) {
                err << "mismatch: " << space.to_string() << " p=" << p << '\n';
                return exit_mismatch;
            }
            return exit_ok;
        }
        if (plethysm->parsed()) {
            std::vector<Partition> parts;
            if (kind == "cauchy")
                parts = cauchy_exterior(m_opt.value_or(n), n, i);
            else if (m_opt)
                throw std::invalid_argument("--m only applies to --kind cauchy");
            else if (kind == "symm")
                parts = symmetric_exterior_partitions(n, i);
            else
                parts = skew_exterior_partitions(n, i);
            out << to_json(parts).dump() << '\n';
            return exit_ok;
        }
        if (character->parsed()) {
            const SpaceSpec space = space_args.build();
            out << multiplicity(space, p, parse_weight(weight)) << '\n';
            return exit_ok;
        }
        if (verify->parsed()) {
            const Family f = parse_family(space_args.family);
            const VerifyReport report = verify_family(f, max_n);
            if (!report.ok()) {
                out << "FAIL " << family_name(f) << " max=" << max_n << '\n';
                err << "first failing cell: " << *report.first_failure << '\n';
                return exit_mismatch;
            }
            out << "OK " << family_name(f) << " max=" << max_n << ": " << report.spaces_checked << " spaces, "
                << report.cells_checked << " cells\n";
            return exit_ok;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace detstrat::cli
