#include "gf5lat/tables.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gf5lat/lattice.hpp"
#include "gf5lat/minweight.hpp"
#include "gf5lat/qseries.hpp"

namespace gf5lat {

namespace {

struct TableShape {
    std::size_t n = 0;
    std::size_t spec_count = 0;
    std::size_t spec_len = 0;
    bool expected = false;
    std::size_t row_count = 0;
};

const std::map<std::string, TableShape>& shapes() {
    static const std::map<std::string, TableShape> s = {
        {"t3", {44, 2, 11, false, 50}},          {"t6", {40, 2, 10, false, 50}},
        {"t7", {42, 1, 21, true, 30}},           {"t8", {38, 1, 19, true, 15}},
        {"t2_expected", {44, 0, 0, true, 50}},   {"t5_expected", {40, 0, 0, true, 50}},
    };
    return s;
}

const TableShape& shape_of(const std::string& table_id) {
    auto it = shapes().find(table_id);
    if (it == shapes().end())
        throw std::invalid_argument("unknown table id: " + table_id);
    return it->second;
}

[[noreturn]] void line_error(const std::string& table_id, std::size_t line,
                             const std::string& what) {
    throw std::runtime_error(table_id + " line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_u64(const std::string& tok, const std::string& table_id, std::size_t line,
                        const char* field) {
    bool digits = !tok.empty();
    for (char ch : tok) digits = digits && ch >= '0' && ch <= '9';
    try {
        if (!digits) throw std::invalid_argument(tok);
        return std::stoull(tok);
    } catch (const std::exception&) {
        line_error(table_id, line, std::string("bad ") + field + " value '" + tok + "'");
    }
}

}  // namespace

std::vector<TableRow> parse_table(const std::string& text, const std::string& table_id) {
    const TableShape& shape = shape_of(table_id);
    std::vector<TableRow> out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty() || tok[0][0] == '#') continue;

        std::size_t want = 1 + shape.spec_count + (shape.expected ? 3 : 0);
        if (tok.size() != want)
            line_error(table_id, lineno,
                       "expected " + std::to_string(want) + " fields, found " +
                           std::to_string(tok.size()));

        TableRow row;
        row.table_id = table_id;
        row.index = parse_u64(tok[0], table_id, lineno, "index");
        if (row.index != out.size() + 1)
            line_error(table_id, lineno,
                       "index " + std::to_string(row.index) + " out of order, expected " +
                           std::to_string(out.size() + 1));
        for (std::size_t s = 0; s < shape.spec_count; ++s) {
            FirstRowSpec spec;
            try {
                spec = parse_first_row(tok[1 + s]);
            } catch (const std::exception& e) {
                line_error(table_id, lineno, e.what());
            }
            if (spec.r.size() != shape.spec_len)
                line_error(table_id, lineno,
                           "first row has " + std::to_string(spec.r.size()) +
                               " entries, expected " + std::to_string(shape.spec_len));
            row.rows.push_back(std::move(spec));
        }
        if (shape.expected) {
            TableExpected e;
            e.inv0 = parse_u64(tok[1 + shape.spec_count], table_id, lineno, "inv0");
            e.inv1 = parse_u64(tok[2 + shape.spec_count], table_id, lineno, "inv1");
            e.min_weight = parse_u64(tok[3 + shape.spec_count], table_id, lineno, "minweight");
            e.kissing = s_extremal_kissing_target(shape.n);
            row.expected = e;
        }
        out.push_back(std::move(row));
    }
    if (out.empty()) {
        std::fprintf(stderr, "warning: table %s has no data rows\n", table_id.c_str());
        return out;
    }
    if (out.size() != shape.row_count)
        throw std::runtime_error(table_id + ": found " + std::to_string(out.size()) +
                                 " rows, expected " + std::to_string(shape.row_count));
    return out;
}

std::vector<TableRow> load_table(const std::string& path) {
    std::string base = path;
    if (std::size_t cut = base.find_last_of('/'); cut != std::string::npos)
        base = base.substr(cut + 1);
    if (base.size() > 4 && base.ends_with(".txt")) base = base.substr(0, base.size() - 4);

    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse_table(text.str(), base);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::string format_table(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    for (const TableRow& row : rows) {
        out << row.index;
        for (const FirstRowSpec& spec : row.rows) out << ' ' << spec.commas();
        if (row.expected)
            out << ' ' << row.expected->inv0 << ' ' << row.expected->inv1 << ' '
                << row.expected->min_weight;
        out << '\n';
    }
    return out.str();
}

std::pair<std::size_t, std::size_t> reference_bounds(std::size_t n, const std::string& path) {
    if (n < 22 || n > 72 || n % 2 != 0)
        throw std::invalid_argument("reference_bounds: length must be even and within 22..72");
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open bounds file: " + path);
    std::string line;
    std::size_t lineno = 0, seen = 0;
    std::pair<std::size_t, std::size_t> hit{0, 0};
    bool found = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (tok.size() != 3) line_error("t4_bounds", lineno, "expected 3 fields");
        std::size_t len = parse_u64(tok[0], "t4_bounds", lineno, "length");
        std::size_t lo = parse_u64(tok[1], "t4_bounds", lineno, "lower");
        std::size_t hi = parse_u64(tok[2], "t4_bounds", lineno, "upper");
        if (len != 22 + 2 * seen)
            line_error("t4_bounds", lineno, "length " + std::to_string(len) + " out of order");
        if (lo > hi) line_error("t4_bounds", lineno, "lower bound exceeds upper bound");
        ++seen;
        if (len == n) {
            hit = {lo, hi};
            found = true;
        }
    }
    if (seen != 26 || !found)
        throw std::runtime_error("bounds file incomplete: " + path);
    return hit;
}

std::vector<RowVerification> verify_reference_tables(const VerifySelection& sel,
                                                 const std::string& data_dir) {
    std::string code_table, expected_table;
    if (sel.table_id == "t2") {
        code_table = "t3";
        expected_table = "t2_expected";
    } else if (sel.table_id == "t5") {
        code_table = "t6";
        expected_table = "t5_expected";
    } else if (sel.table_id == "t7" || sel.table_id == "t8") {
        code_table = expected_table = sel.table_id;
    } else {
        throw std::invalid_argument("verify_reference_tables: no reference values for table '" +
                                    sel.table_id + "'");
    }

    std::vector<TableRow> codes = load_table(data_dir + "/" + code_table + ".txt");
    std::vector<TableRow> expected =
        code_table == expected_table ? codes
                                     : load_table(data_dir + "/" + expected_table + ".txt");

    std::vector<std::size_t> indices = sel.indices;
    if (indices.empty())
        for (std::size_t i = 1; i <= codes.size(); ++i) indices.push_back(i);

    std::vector<RowVerification> out;
    for (std::size_t idx : indices) {
        if (idx == 0 || idx > codes.size())
            throw std::invalid_argument("verify_reference_tables: row " + std::to_string(idx) +
                                        " out of range for " + code_table);
        const TableRow& code_row = codes[idx - 1];
        const TableExpected& exp = expected[idx - 1].expected.value();

        RowVerification rv;
        rv.index = idx;
        std::vector<std::string> fails;
        std::ostringstream got;

        LinearCode c = code_row.rows.size() == 2
                           ? four_negacirculant_code(code_row.rows[0], code_row.rows[1])
                           : quasi_twisted_code(code_row.rows[0]);
        if (!is_self_dual(c)) {
            fails.push_back("code is not self-dual");
        } else {
            std::size_t d = brouwer_zimmermann(c).d;
            got << "min_weight=" << d;
            if (d != exp.min_weight)
                fails.push_back("min weight: expected " + std::to_string(exp.min_weight) +
                                ", got " + std::to_string(d));

            IntegerLattice l = construction_a(c);
            ShortVectorSet sv = short_vectors(l, 4);
            bool min4 = sv.count > 0 && sv.norms_num[0] == 4 * sv.denom;
            if (!min4) {
                mpq_class m(mpz_class(sv.count == 0 ? 0 : sv.norms_num[0]), sv.denom);
                m.canonicalize();
                fails.push_back("minimum norm: expected 4, got " +
                                (sv.count == 0 ? std::string("> 4") : m.get_str()));
            } else {
                std::size_t kiss = 2 * sv.count_at(4);
                got << " kissing=" << kiss;
                if (kiss != exp.kissing)
                    fails.push_back("kissing number: expected " + std::to_string(exp.kissing) +
                                    ", got " + std::to_string(kiss));
                InvariantPair inv = inv_pair(sv);
                got << " inv0=" << inv.inv0 << " inv1=" << inv.inv1;
                if (inv.inv0 != exp.inv0 || inv.inv1 != exp.inv1)
                    fails.push_back("invariant pair: expected (" + std::to_string(exp.inv0) +
                                    ", " + std::to_string(exp.inv1) + "), got (" +
                                    std::to_string(inv.inv0) + ", " + std::to_string(inv.inv1) +
                                    ")");
            }
        }

        rv.pass = fails.empty();
        if (rv.pass) {
            rv.detail = got.str();
        } else {
            for (std::size_t i = 0; i < fails.size(); ++i)
                rv.detail += (i ? "; " : "") + fails[i];
        }
        out.push_back(std::move(rv));
    }
    return out;
}

}  // namespace gf5lat
