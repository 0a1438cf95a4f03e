#include "twolayer/counting.hpp"

#include <algorithm>
#include <sstream>

namespace twolayer {

BigInt g_count(int n) {
    if (n < 1) throw std::invalid_argument("g_count needs n >= 1");
    BigInt prev2 = 1, prev1 = 2;  // G_1, G_2
    if (n == 1) return prev2;
    if (n == 2) return prev1;
    BigInt cur = 0;
    for (int k = 3; k <= n; ++k) {
        cur = prev1 + (k - 1) * prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return cur;
}

const TableRow* CountTable::row(int n) const {
    for (const TableRow& r : rows)
        if (r.n == n) return &r;
    return nullptr;
}

CountTable assemble_table(int max_n, const TableBudgets& budgets) {
    if (max_n < 3) throw std::invalid_argument("table starts at n = 3");
    CountTable table;
    for (int n = 3; n <= max_n; ++n) {
        TableRow row;
        row.n = n;
        row.G = {g_count(n), CellMethod::Recurrence};
        if (n <= budgets.s_max)
            row.S = {sum_orbit_sizes(n, GrammarVariant::Saturated), CellMethod::OrbitSum};
        if (n <= budgets.rg_max)
            row.RG = {count_classes(n, GrammarVariant::Full, budgets.jobs),
                      CellMethod::Generator};
        if (n <= budgets.rs_max)
            row.RS = {count_classes(n, GrammarVariant::Saturated, budgets.jobs),
                      CellMethod::Generator};
        if (n <= budgets.r_max)
            row.R = {count_classes(n, GrammarVariant::SaturatedModuloReflection, budgets.jobs),
                     CellMethod::Generator};
        table.rows.push_back(std::move(row));
    }
    return table;
}

IdentityReport verify_identities(const CountTable& table, int redundant_max) {
    IdentityReport report;
    auto note = [&](bool ok, const std::string& what) {
        (ok ? report.checks : report.failures).push_back(what);
    };
    for (const TableRow& row : table.rows) {
        int n = row.n;
        const TableRow* r1 = table.row(n - 1);
        const TableRow* r2 = table.row(n - 2);
        if (n >= 5 && r1 && r2) {
            bool ok = row.G.value == r1->G.value + (n - 1) * r2->G.value;
            note(ok, "G(" + std::to_string(n) + ") = G(" + std::to_string(n - 1) + ") + " +
                         std::to_string(n - 1) + "*G(" + std::to_string(n - 2) + ")");
        }
        if (n % 2 == 1 && r1 && r2 && row.RG.present() && r1->RG.present() &&
            r2->RG.present()) {
            bool ok = row.RG.value == r1->RG.value + 2 * r2->RG.value;
            note(ok, "RG(" + std::to_string(n) + ") = RG(" + std::to_string(n - 1) +
                         ") + 2*RG(" + std::to_string(n - 2) + ")");
        }
        if (n <= redundant_max && r2 && r2->RG.present() && row.RG.present()) {
            BigInt redundant = 0;
            for_each_class(n, GrammarVariant::Full, [&](const Sentence& s) {
                if (std::find(s.begin(), s.end(), "1") != s.end()) ++redundant;
            });
            bool ok = redundant == r2->RG.value;
            note(ok, "redundant classes(" + std::to_string(n) + ") = RG(" +
                         std::to_string(n - 2) + ")");
        }
    }
    return report;
}

namespace {

std::string cell_text(const TableCell& cell, bool grouped) {
    if (!cell.present()) return "";
    return grouped ? group_digits(cell.value) : cell.value.str();
}

}  // namespace

std::string group_digits(const BigInt& v) {
    std::string digits = v.str();
    std::string out;
    int count = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (count && count % 3 == 0 && *it != '-') out += ',';
        out += *it;
        ++count;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::string table_to_csv(const CountTable& table, bool method_footer) {
    std::ostringstream out;
    out << "n,G,S,RG,RS,R\n";
    for (const TableRow& r : table.rows) {
        out << r.n << ',' << cell_text(r.G, false) << ',' << cell_text(r.S, false) << ','
            << cell_text(r.RG, false) << ',' << cell_text(r.RS, false) << ','
            << cell_text(r.R, false) << "\n";
    }
    if (method_footer) {
        out << "# methods: G=recurrence S=orbit-sum RG=generator RS=generator "
               "R=generator; empty cell = outside budget\n";
    }
    return out.str();
}

std::string table_to_pretty(const CountTable& table) {
    const char* names[5] = {"|G_n|", "|S_n|", "|R(G_n)|", "|R(S_n)|", "|R_n|"};
    std::vector<std::vector<std::string>> cols;
    cols.push_back({"n", names[0], names[1], names[2], names[3], names[4]});
    for (const TableRow& r : table.rows) {
        cols.push_back({std::to_string(r.n), cell_text(r.G, true), cell_text(r.S, true),
                        cell_text(r.RG, true), cell_text(r.RS, true), cell_text(r.R, true)});
    }
    std::ostringstream out;
    for (std::size_t line = 0; line < 6; ++line) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::size_t width = 0;
            for (const std::string& s : cols[c]) width = std::max(width, s.size());
            const std::string& s = cols[c][line];
            out << std::string(width - s.size() + (c ? 2 : 0), ' ') << s;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace twolayer
