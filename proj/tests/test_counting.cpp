#include <doctest.h>

#include "twolayer/counting.hpp"

using namespace twolayer;

TEST_CASE("matching counts") {
    CHECK(g_count(1) == 1);
    CHECK(g_count(2) == 2);
    CHECK(g_count(5) == 26);
    CHECK(g_count(13) == 568504);
    CHECK(g_count(19) == BigInt("4809701440"));
    CHECK_THROWS_AS(g_count(0), std::invalid_argument);
}

TEST_CASE("table assembly") {
    TableBudgets budgets;
    budgets.s_max = 13;
    CountTable table = assemble_table(13, budgets);
    const TableRow* r13 = table.row(13);
    REQUIRE(r13 != nullptr);
    CHECK(r13->G.value == 568504);
    CHECK(r13->RG.value == 1378);
    CHECK(r13->RS.value == 212);
    CHECK(r13->R.value == 117);

    const TableRow* r3 = table.row(3);
    CHECK(r3->G.value == 4);
    CHECK(r3->S.value == 2);
    CHECK(r3->RG.value == 4);
    CHECK(r3->RS.value == 2);
    CHECK(r3->R.value == 1);

    // budget exhaustion leaves cells absent
    TableBudgets tight;
    tight.s_max = 4;
    tight.rg_max = 4;
    CountTable partial = assemble_table(6, tight);
    CHECK(!partial.row(6)->S.present());
    CHECK(!partial.row(6)->RG.present());
    CHECK(partial.row(6)->RS.present());
}

TEST_CASE("identities") {
    TableBudgets budgets;
    budgets.s_max = 8;
    CountTable table = assemble_table(13, budgets);
    IdentityReport report = verify_identities(table);
    CHECK(report.ok());
    CHECK(!report.checks.empty());

    // RG(13) = RG(12) + 2 RG(11) with the table's own values
    CHECK(table.row(13)->RG.value ==
          table.row(12)->RG.value + 2 * table.row(11)->RG.value);

    // a corrupted cell is caught
    CountTable broken = table;
    for (TableRow& row : broken.rows)
        if (row.n == 13) row.RG.value += 1;
    CHECK(!verify_identities(broken).ok());
}

TEST_CASE("csv format") {
    TableBudgets budgets;
    budgets.s_max = 4;
    CountTable table = assemble_table(4, budgets);
    std::string csv = table_to_csv(table, false);
    CHECK(csv == "n,G,S,RG,RS,R\n3,4,2,4,2,1\n4,10,2,8,2,2\n");
    std::string with_footer = table_to_csv(table, true);
    CHECK(with_footer.find("# methods:") != std::string::npos);
}

TEST_CASE("digit grouping") {
    CHECK(group_digits(BigInt(1378)) == "1,378");
    CHECK(group_digits(BigInt(117)) == "117");
    CHECK(group_digits(BigInt("4809701440")) == "4,809,701,440");
}
