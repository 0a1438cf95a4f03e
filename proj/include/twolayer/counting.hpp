#pragma once

#include <string>
#include <vector>

#include "twolayer/generator.hpp"

// Count-table assembly and the counting identities: the matching recurrence
// for |G_n|, the redundant-class identity, and the odd-n class recurrence.

namespace twolayer {

// |G_n| = |G_{n-1}| + (n-1)|G_{n-2}|, |G_1| = 1, |G_2| = 2 (the number of
// matchings on n vertices).
BigInt g_count(int n);

enum class CellMethod { Recurrence, OrbitSum, Generator, Absent };

struct TableCell {
    BigInt value = 0;
    CellMethod method = CellMethod::Absent;
    bool present() const { return method != CellMethod::Absent; }
};

struct TableRow {
    int n = 0;
    TableCell G, S, RG, RS, R;
};

struct CountTable {
    std::vector<TableRow> rows;  // ascending n, starting at 3
    const TableRow* row(int n) const;
};

struct TableBudgets {
    int s_max = 20;   // S via orbit sums over saturated classes
    int rg_max = 30;  // class counts via the generator
    int rs_max = 40;
    int r_max = 40;
    int jobs = 1;
};

// Cells beyond their budget stay absent, never wrong.
CountTable assemble_table(int max_n, const TableBudgets& budgets = {});

struct IdentityReport {
    std::vector<std::string> checks;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// (a) the recurrence on every consecutive G triple, (b) for odd n,
// RG(n) = RG(n-1) + 2 RG(n-2), (c) classes containing the doubled pair "1"
// on n channels = RG(n-2), counted by enumeration for n <= redundant_max.
IdentityReport verify_identities(const CountTable& table, int redundant_max = 16);

// Header n,G,S,RG,RS,R; absent cells empty; method legend as trailing
// comment lines.
std::string table_to_csv(const CountTable& table, bool method_footer = true);
// Aligned, comma-grouped table for reading.
std::string table_to_pretty(const CountTable& table);

std::string group_digits(const BigInt& v);

}  // namespace twolayer
