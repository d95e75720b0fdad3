#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gf5lat/negacirculant.hpp"

namespace gf5lat {

/* reference values a table carries next to a row; kissing is the
   family-wide target implied by the table's dimension */
struct TableExpected {
    std::uint64_t inv0 = 0, inv1 = 0;
    std::uint64_t kissing = 0;
    std::size_t min_weight = 0;

    bool operator==(const TableExpected&) const = default;
};

struct TableRow {
    std::string table_id;
    std::size_t index = 0;
    std::vector<FirstRowSpec> rows;
    std::optional<TableExpected> expected;

    bool operator==(const TableRow&) const = default;
};

/* known ids: t3 and t6 carry first-row pairs, t7 and t8 carry one first
   row plus expected values, t2_expected and t5_expected carry expected
   values for the codes of t3 and t6; row counts, index order and field
   arity are all enforced, and a malformed line reports its number */
std::vector<TableRow> parse_table(const std::string& text, const std::string& table_id);

/* reads a table file, taking the id from the file name */
std::vector<TableRow> load_table(const std::string& path);

/* data lines in the shipped format, ready to reparse */
std::string format_table(const std::vector<TableRow>& rows);

/* smallest and largest possible minimum weight of a self-dual code of
   even length 22..72, looked up in the shipped reference file */
std::pair<std::size_t, std::size_t> reference_bounds(std::size_t n, const std::string& path);

/* which reference table to check, and which of its rows */
struct VerifySelection {
    std::string table_id;             /* t2, t5, t7 or t8 */
    std::vector<std::size_t> indices; /* empty selects every row */
};

struct RowVerification {
    std::size_t index = 0;
    bool pass = false;
    std::string detail;
};

/* rebuilds each selected code from its first rows and checks, in order:
   self-duality, minimum weight, lattice minimum norm 4, kissing number,
   invariant pair; a mismatch reports expected and computed values */
std::vector<RowVerification> verify_reference_tables(const VerifySelection& sel,
                                                 const std::string& data_dir);

}  // namespace gf5lat
