#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gf5lat/isometry.hpp"
#include "gf5lat/lattice.hpp"
#include "gf5lat/minweight.hpp"
#include "gf5lat/negacirculant.hpp"
#include "gf5lat/qseries.hpp"
#include "gf5lat/search.hpp"
#include "gf5lat/tables.hpp"

using namespace gf5lat;

namespace {

struct Options {
    std::string data_dir = "data";
    bool json = false;
};

/* one result record: a text line of k=v pairs, or one JSON object */
struct Record {
    std::vector<std::pair<std::string, std::string>> text;
    nlohmann::json j = nlohmann::json::object();

    void add(const std::string& key, const std::string& value) {
        text.emplace_back(key, value);
        j[key] = value;
    }
    void add(const std::string& key, const char* value) { add(key, std::string(value)); }
    void add(const std::string& key, std::uint64_t value) {
        text.emplace_back(key, std::to_string(value));
        j[key] = value;
    }
    void add(const std::string& key, bool value) {
        text.emplace_back(key, value ? "true" : "false");
        j[key] = value;
    }
    void add(const std::string& key, const mpq_class& value) { add(key, value.get_str()); }
    void add(const std::string& key, const std::vector<FirstRowSpec>& rows) {
        std::string joined;
        nlohmann::json arr = nlohmann::json::array();
        for (const FirstRowSpec& r : rows) {
            if (!joined.empty()) joined += ' ';
            joined += r.commas();
            arr.push_back(r.commas());
        }
        text.emplace_back(key, joined);
        j[key] = arr;
    }

    void print(const Options& o) const {
        if (o.json) {
            std::cout << j.dump() << '\n';
            return;
        }
        for (std::size_t i = 0; i < text.size(); ++i)
            std::cout << (i ? " " : "") << text[i].first << '=' << text[i].second;
        std::cout << '\n';
    }
};

TableRow find_row(const Options& o, const std::string& table, std::size_t index) {
    auto rows = load_table(o.data_dir + "/" + table + ".txt");
    for (const TableRow& r : rows)
        if (r.index == index) return r;
    throw std::invalid_argument("table " + table + " has no row " + std::to_string(index));
}

LinearCode code_from_row(const TableRow& row) {
    if (row.rows.size() == 2) return four_negacirculant_code(row.rows[0], row.rows[1]);
    return quasi_twisted_code(row.rows[0]);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::invalid_argument("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out.good()) throw std::invalid_argument("cannot write " + path);
    out << content;
}

std::vector<std::size_t> parse_row_range(const std::string& text) {
    auto dash = text.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == text.size())
        throw std::invalid_argument("--rows wants a range like 1-5");
    std::size_t a = std::stoull(text.substr(0, dash));
    std::size_t b = std::stoull(text.substr(dash + 1));
    if (a == 0 || b < a) throw std::invalid_argument("--rows range is empty");
    std::vector<std::size_t> out;
    for (std::size_t i = a; i <= b; ++i) out.push_back(i);
    return out;
}

int cmd_code_build(const Options& o, const std::string& table, std::size_t index) {
    TableRow row = find_row(o, table, index);
    LinearCode c = code_from_row(row);
    Record r;
    if (o.json) {
        r.j["table"] = table;
        r.j["index"] = index;
    }
    r.add("n", static_cast<std::uint64_t>(c.n));
    r.add("k", static_cast<std::uint64_t>(c.k));
    r.add("self_dual", is_self_dual(c));
    r.add("rows", row.rows);
    r.print(o);
    return 0;
}

int cmd_code_minweight(const Options& o, const std::string& table, std::size_t index) {
    LinearCode c = code_from_row(find_row(o, table, index));
    MinWeightResult mw = brouwer_zimmermann(c);
    Record r;
    if (o.json) {
        r.j["table"] = table;
        r.j["index"] = index;
    }
    r.add("d", static_cast<std::uint64_t>(mw.d));
    r.print(o);
    return 0;
}

int cmd_code_puncture(const Options& o, const std::string& table, std::size_t index) {
    LinearCode c = code_from_row(find_row(o, table, index));
    for (std::size_t coord = 0; coord < c.n; ++coord) {
        LinearCode pc = puncture(c, coord);
        Record r;
        if (o.json) {
            r.j["table"] = table;
            r.j["index"] = index;
        }
        r.add("coord", static_cast<std::uint64_t>(coord + 1));
        r.add("n", static_cast<std::uint64_t>(pc.n));
        r.add("k", static_cast<std::uint64_t>(pc.k));
        r.add("d", static_cast<std::uint64_t>(brouwer_zimmermann(pc).d));
        r.print(o);
    }
    return 0;
}

int cmd_lattice_fromcode(const Options& o, const std::string& table, std::size_t index,
                         const std::string& out) {
    IntegerLattice l = construction_a(code_from_row(find_row(o, table, index)));
    std::string text = lattice_to_text(l);
    if (!out.empty()) {
        write_file(out, text);
        Record r;
        if (o.json) {
            r.j["table"] = table;
            r.j["index"] = index;
        }
        r.add("out", out);
        r.print(o);
        return 0;
    }
    if (o.json) {
        Record r;
        r.j["table"] = table;
        r.j["index"] = index;
        r.add("lattice", text);
        r.print(o);
        return 0;
    }
    std::cout << text;
    return 0;
}

int cmd_lattice_kissing(const Options& o, const std::string& table, std::size_t index) {
    IntegerLattice l = construction_a(code_from_row(find_row(o, table, index)));
    ShortVectorSet sv = short_vectors(l, 4);
    Record r;
    if (o.json) {
        r.j["table"] = table;
        r.j["index"] = index;
    }
    if (sv.count == 0) {
        r.add("min", "none<=4");
        r.add("kissing", std::uint64_t(0));
    } else {
        mpq_class min(mpz_class(sv.norms_num[0]), sv.denom);
        min.canonicalize();
        r.add("min", min);
        r.add("kissing", static_cast<std::uint64_t>(2 * sv.count_at(min)));
    }
    r.print(o);
    return 0;
}

int cmd_lattice_inv(const Options& o, const std::string& table, std::size_t index) {
    IntegerLattice l = construction_a(code_from_row(find_row(o, table, index)));
    ShortVectorSet sv = short_vectors(l, 4);
    if (sv.count == 0 || sv.norms_num[0] != 4 * sv.denom) {
        std::cerr << "error: minimum norm is not 4\n";
        return 1;
    }
    InvariantPair p = inv_pair(sv);
    Record r;
    if (o.json) {
        r.j["table"] = table;
        r.j["index"] = index;
    }
    r.add("inv0", p.inv0);
    r.add("inv1", p.inv1);
    r.print(o);
    return 0;
}

int cmd_lattice_shadow(const Options& o, const std::string& table, std::size_t index,
                       bool with_s_extremal) {
    IntegerLattice l = construction_a(code_from_row(find_row(o, table, index)));
    ShadowDecomposition sd = shadow(l);
    Record r;
    if (o.json) {
        r.j["table"] = table;
        r.j["index"] = index;
    }
    r.add("shadow_min", sd.shadow_min);
    if (with_s_extremal) r.add("s_extremal", is_s_extremal(l));
    r.print(o);
    return 0;
}

int cmd_lattice_neighbors(const Options& o, const std::string& table, std::size_t index,
                          const std::string& out_prefix) {
    IntegerLattice l = construction_a(code_from_row(find_row(o, table, index)));
    auto [n1, n2] = neighbors(l);
    const IntegerLattice* both[2] = {&n1, &n2};
    for (int i = 0; i < 2; ++i) {
        const IntegerLattice& nb = *both[i];
        ShortVectorSet sv = short_vectors(nb, 4);
        Record r;
        if (o.json) {
            r.j["table"] = table;
            r.j["index"] = index;
        }
        r.add("neighbor", static_cast<std::uint64_t>(i + 1));
        if (sv.count == 0) {
            r.add("min", "none<=4");
            r.add("kissing", std::uint64_t(0));
        } else {
            mpq_class min(mpz_class(sv.norms_num[0]), sv.denom);
            min.canonicalize();
            r.add("min", min);
            r.add("kissing", static_cast<std::uint64_t>(2 * sv.count_at(min)));
        }
        r.add("shadow_min", shadow(nb).shadow_min);
        if (!out_prefix.empty()) {
            std::string path = out_prefix + std::to_string(i + 1) + ".txt";
            write_file(path, lattice_to_text(nb));
            r.add("out", path);
        }
        r.print(o);
    }
    return 0;
}

int cmd_lattice_isom(const Options& o, const std::string& path_a, const std::string& path_b,
                     std::uint64_t node_budget) {
    IntegerLattice a = lattice_from_text(slurp(path_a));
    IntegerLattice b = lattice_from_text(slurp(path_b));
    IsometryResult res = is_isomorphic(a, b, node_budget);
    Record r;
    if (o.json) {
        r.j["a"] = path_a;
        r.j["b"] = path_b;
    }
    switch (res) {
        case IsometryResult::isomorphic: r.add("isomorphic", "true"); break;
        case IsometryResult::not_isomorphic: r.add("isomorphic", "false"); break;
        case IsometryResult::inconclusive: r.add("isomorphic", "inconclusive"); break;
    }
    r.print(o);
    return res == IsometryResult::inconclusive ? 1 : 0;
}

int cmd_theta_check(const Options& o, const std::string& table, std::size_t index,
                    std::size_t bound) {
    IntegerLattice l = construction_a(code_from_row(find_row(o, table, index)));
    std::size_t jmax = l.n / 8;
    if (bound == 0) bound = jmax;
    if (bound < jmax)
        throw std::invalid_argument("--bound must be at least " + std::to_string(jmax) +
                                    " for this dimension");
    QSeries theta = theta_from_lattice(l, mpq_class(static_cast<long>(bound)));
    ThetaDecomposition dec = decompose_theta(l.n, theta);

    QSeries th3 = jacobi_theta(3, ThetaArgument::q, theta.precision);
    QSeries d8 = delta8(theta.precision);
    QSeries acc(theta.precision);
    for (std::size_t j = 0; j < dec.a.size(); ++j)
        acc = add(acc, scale(mul(pow(th3, l.n - 8 * j), pow(d8, j)), dec.a[j]));
    bool consistent = acc == theta;

    std::string a = "(";
    for (std::size_t j = 0; j < dec.a.size(); ++j)
        a += (j ? "," : "") + dec.a[j].get_str();
    a += ")";

    Record r;
    if (o.json) {
        r.j["table"] = table;
        r.j["index"] = index;
    }
    r.add("n", static_cast<std::uint64_t>(l.n));
    r.add("bound", static_cast<std::uint64_t>(bound));
    r.add("a", a);
    r.add("consistent", consistent);
    if (bound >= 4) r.add("norm4_count", theta.coeff(16).get_str());
    r.print(o);
    return consistent ? 0 : 1;
}

int cmd_verify_table(const Options& o, const std::string& table_id,
                     const std::string& rows_range, std::size_t index) {
    VerifySelection sel;
    sel.table_id = table_id;
    if (index != 0) sel.indices = {index};
    if (!rows_range.empty()) sel.indices = parse_row_range(rows_range);
    auto results = verify_reference_tables(sel, o.data_dir);
    bool all_pass = true;
    for (const RowVerification& row : results) {
        all_pass = all_pass && row.pass;
        if (o.json) {
            Record r;
            r.j["table"] = table_id;
            r.add("row", static_cast<std::uint64_t>(row.index));
            r.add("pass", row.pass);
            r.add("detail", row.detail);
            r.print(o);
        } else {
            std::cout << "row=" << row.index << (row.pass ? " PASS " : " FAIL ") << row.detail
                      << '\n';
        }
    }
    return all_pass ? 0 : 1;
}

int cmd_search(const Options& o, const std::string& family, std::size_t n, std::uint64_t seed,
               std::uint64_t budget, std::uint64_t target) {
    SearchConfig cfg;
    cfg.family = family == "four" ? CodeFamily::four_negacirculant : CodeFamily::quasi_twisted;
    cfg.n = n;
    cfg.seed = seed;
    cfg.budget = budget;
    cfg.kissing_target = target;
    SearchReport report = search(cfg);
    for (const SearchHit& hit : report.hits) {
        Record r;
        r.add("trial", hit.trial);
        r.add("rows", hit.rows);
        r.add("inv0", hit.inv.inv0);
        r.add("inv1", hit.inv.inv1);
        r.add("min_weight", static_cast<std::uint64_t>(hit.min_weight));
        r.print(o);
    }
    Record summary;
    if (o.json) {
        summary.j["family"] = family;
        summary.j["n"] = n;
        summary.j["seed"] = seed;
        summary.j["budget"] = budget;
    }
    summary.add("trials_run", report.trials_run);
    summary.add("hits", static_cast<std::uint64_t>(report.hits.size()));
    summary.add("distinct_invariant_pairs",
                static_cast<std::uint64_t>(report.distinct_invariant_pairs));
    summary.print(o);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"self-dual codes over GF(5) and the unimodular lattices they generate"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--data-dir", opt.data_dir, "table data directory")->capture_default_str();
    app.add_flag("--json", opt.json, "one JSON record per line");

    std::string table, rows_range, out, out_prefix, family = "qt";
    std::string isom_a, isom_b;
    std::size_t index = 0, n = 0, bound = 0;
    std::uint64_t seed = 0, budget = 0, target = 0, node_budget = 100000000;
    bool with_s_extremal = false;
    int rc = 0;

    auto add_row_options = [&](CLI::App* sub) {
        sub->add_option("--table", table, "table id, e.g. t3")->required();
        sub->add_option("--index", index, "row index within the table")->required();
        sub->fallthrough();
    };

    CLI::App* code = app.add_subcommand("code", "linear code operations");
    code->require_subcommand(1);
    code->fallthrough();
    CLI::App* code_build = code->add_subcommand("build", "build a code from a table row");
    add_row_options(code_build);
    code_build->callback([&] { rc = cmd_code_build(opt, table, index); });
    CLI::App* code_mw = code->add_subcommand("minweight", "exact minimum weight");
    add_row_options(code_mw);
    code_mw->callback([&] { rc = cmd_code_minweight(opt, table, index); });
    CLI::App* code_punct =
        code->add_subcommand("puncture", "parameters of every punctured code");
    add_row_options(code_punct);
    code_punct->callback([&] { rc = cmd_code_puncture(opt, table, index); });

    CLI::App* lattice = app.add_subcommand("lattice", "lattice operations");
    lattice->require_subcommand(1);
    lattice->fallthrough();
    CLI::App* lat_from = lattice->add_subcommand("fromcode", "serialize the code's lattice");
    add_row_options(lat_from);
    lat_from->add_option("--out", out, "write the lattice to a file instead of stdout");
    lat_from->callback([&] { rc = cmd_lattice_fromcode(opt, table, index, out); });
    CLI::App* lat_kiss = lattice->add_subcommand("kissing", "minimum norm and kissing number");
    add_row_options(lat_kiss);
    lat_kiss->callback([&] { rc = cmd_lattice_kissing(opt, table, index); });
    CLI::App* lat_inv = lattice->add_subcommand("inv", "norm-4 invariant pair");
    add_row_options(lat_inv);
    lat_inv->callback([&] { rc = cmd_lattice_inv(opt, table, index); });
    CLI::App* lat_shadow = lattice->add_subcommand("shadow", "shadow minimum norm");
    add_row_options(lat_shadow);
    lat_shadow->add_flag("--s-extremal", with_s_extremal, "also test s-extremality");
    lat_shadow->callback([&] { rc = cmd_lattice_shadow(opt, table, index, with_s_extremal); });
    CLI::App* lat_nb = lattice->add_subcommand("neighbors", "the two unimodular neighbors");
    add_row_options(lat_nb);
    lat_nb->add_option("--out-prefix", out_prefix, "write neighbor lattices to <prefix>N.txt");
    lat_nb->callback([&] { rc = cmd_lattice_neighbors(opt, table, index, out_prefix); });
    CLI::App* lat_isom = lattice->add_subcommand("isom", "decide lattice isometry");
    lat_isom->add_option("a", isom_a, "first lattice file")->required();
    lat_isom->add_option("b", isom_b, "second lattice file")->required();
    lat_isom->add_option("--node-budget", node_budget, "search nodes before giving up")
        ->capture_default_str();
    lat_isom->fallthrough();
    lat_isom->callback([&] { rc = cmd_lattice_isom(opt, isom_a, isom_b, node_budget); });

    CLI::App* theta = app.add_subcommand("theta", "theta series operations");
    theta->require_subcommand(1);
    theta->fallthrough();
    CLI::App* theta_check =
        theta->add_subcommand("check", "decompose the lattice theta series");
    add_row_options(theta_check);
    theta_check->add_option(
        "--bound", bound,
        "enumerate norms up to this bound (default n/8; larger cross-checks more "
        "coefficients, length 44 needs minutes)");
    theta_check->callback([&] { rc = cmd_theta_check(opt, table, index, bound); });

    CLI::App* verify = app.add_subcommand("verify", "recompute shipped reference values");
    verify->require_subcommand(1);
    verify->fallthrough();
    CLI::App* verify_table =
        verify->add_subcommand("table", "verify expected columns of a table");
    verify_table->add_option("id", table, "table id: t2, t5, t7 or t8")->required();
    auto* rows_opt = verify_table->add_option("--rows", rows_range, "row range like 1-5");
    verify_table->add_option("--index", index, "single row index")->excludes(rows_opt);
    verify_table->fallthrough();
    verify_table->callback([&] { rc = cmd_verify_table(opt, table, rows_range, index); });

    CLI::App* search_cmd = app.add_subcommand("search", "seeded random code search");
    search_cmd->add_option("--family", family, "qt or four")
        ->check(CLI::IsMember({"qt", "four"}))
        ->capture_default_str();
    search_cmd->add_option("--n", n, "code length")->required();
    search_cmd->add_option("--seed", seed, "search seed")->required();
    search_cmd->add_option("--budget", budget, "trial count")->required();
    search_cmd->add_option("--target", target,
                           "kissing number a hit must reach (default: s-extremal target)");
    search_cmd->fallthrough();
    search_cmd->callback([&] { rc = cmd_search(opt, family, n, seed, budget, target); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code_out = app.exit(e);
        return code_out == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
