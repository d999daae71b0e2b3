#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "octic/census.hpp"

namespace octic {

/// One row of a stratum table. Reference rows and computed rows share the
/// layout; the cells the pipeline does not compute are kept as text and
/// reported as skipped.
struct TableRow {
    std::string table;     ///< "1", "2", "3" or "3.2"
    std::string clusters;  ///< "open" or "Θ1,Θ1,Θ5"
    std::string patterns;  ///< table 1 only, sorted, comma separated
    std::string delta2;    ///< table 1 only, "5/8"
    int delta5 = 0;        ///< table 1 only, in {0, 1, 2} (up to sign mod 5)
    std::size_t lines = 0;
    std::size_t reducible = 0;
    std::size_t irreducible = 0;
    std::string group;  ///< "15360" or "1024·16"
    std::size_t i_delta = 1;
    std::uint64_t kernel_order = 0;  ///< order of G_Ω
    i64 det = 0;
    i64 fano_index = 1;
    std::vector<std::string> t_forms;  ///< tables 3 and 3.2

    // Not computed.
    std::string g_omega_id;  ///< "(16,14)^1"
    std::string rc;          ///< "(1,0)=(1,0)", one entry per T form joined by ";"

    std::string conics() const;  ///< "16+20", or "40" with no reducible conics
    /// Every computed cell, in a fixed order; equal keys mean matching rows.
    std::string key() const;
};

/// Reference rows of the published tables: codim 1 (with the open stratum),
/// codim 2, codim 3 (tables 3 and 3.2).
std::vector<TableRow> reference_rows(int codim);

TableRow computed_row(const StratumRecord& record);
/// Row of the open stratum (Λ̃ itself).
TableRow open_stratum_row(const CensusContext& ctx);

struct TableDiff {
    std::vector<std::pair<TableRow, TableRow>> matched;  ///< (reference, computed)
    std::vector<TableRow> missing;                       ///< reference rows without a computed match
    std::vector<TableRow> extra;                         ///< computed rows without a reference match
    bool ok() const { return missing.empty() && extra.empty(); }
};
/// Multiset comparison by key().
TableDiff compare_rows(const std::vector<TableRow>& reference, const std::vector<TableRow>& computed);

/// Column names of to_csv.
std::string csv_header();
std::string to_csv(const TableRow& row);
/// Header line plus one line per row, each terminated by '\n'.
std::string to_csv(const std::vector<TableRow>& rows);

}  // namespace octic
