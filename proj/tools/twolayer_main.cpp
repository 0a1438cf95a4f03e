#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "twolayer/counting.hpp"
#include "twolayer/generator.hpp"
#include "twolayer/oracle.hpp"
#include "twolayer/saturation.hpp"

// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource limit.

namespace {

using namespace twolayer;

int cmd_list(int n, const std::string& set, int jobs, const std::string& out_path) {
    std::vector<std::string> lines = generate_classes(n, parse_variant(set), jobs);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot write " << out_path << "\n";
            return 1;
        }
        out = &file;
    }
    for (const std::string& s : lines) *out << s << "\n";
    *out << "# count=" << lines.size() << "\n";
    return out->good() ? 0 : 1;
}

int cmd_count(int n, const std::string& set, int jobs) {
    if (set == "G") {
        std::cout << g_count(n).str() << "\n";
    } else if (set == "S") {
        std::cout << sum_orbit_sizes(n, GrammarVariant::Saturated).str() << "\n";
    } else {
        std::cout << count_classes(n, parse_variant(set), jobs) << "\n";
    }
    return 0;
}

int cmd_table(int max_n, TableBudgets budgets, bool pretty) {
    CountTable table = assemble_table(max_n, budgets);
    IdentityReport report = verify_identities(table);
    std::cout << (pretty ? table_to_pretty(table) : table_to_csv(table));
    for (const std::string& f : report.failures)
        std::cerr << "identity check failed: " << f << "\n";
    return report.ok() ? 0 : 1;
}

int cmd_word(const std::string& path) {
    Network net;
    if (path == "-") {
        net = read_network(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "cannot read " << path << "\n";
            return 2;
        }
        net = read_network(in);
    }
    std::cout << sentence_to_string(sentence_of(net)) << "\n";
    return 0;
}

int cmd_net(int n, const std::string& sentence) {
    std::cout << write_network(net_of_sentence(parse_sentence(sentence), n));
    return 0;
}

int cmd_reflect(const std::string& sentence) {
    std::cout << sentence_to_string(reflect_sentence(parse_sentence(sentence))) << "\n";
    return 0;
}

int cmd_export(int n, const std::string& set, int jobs, const std::string& dir) {
    std::vector<std::string> lines = generate_classes(n, parse_variant(set), jobs);
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::filesystem::path path =
            std::filesystem::path(dir) /
            (std::to_string(n) + "_" + std::to_string(i) + "_" + lines[i] + ".net");
        std::ofstream out(path);
        out << write_network(net_of_sentence(parse_sentence(lines[i]), n));
        if (!out.good()) {
            std::cerr << "cannot write " << path << "\n";
            return 1;
        }
    }
    std::cout << lines.size() << " networks written to " << dir << "\n";
    return 0;
}

struct CheckMatrix {
    bool all_pass = true;
    bool any_skipped = false;

    void report(const std::string& name, bool pass) {
        std::cout << (pass ? "pass  " : "FAIL  ") << name << "\n";
        all_pass &= pass;
    }
    void skip(const std::string& name, const std::string& why) {
        std::cout << "skip  " << name << " (" << why << ")\n";
        any_skipped = true;
    }
};

int cmd_verify(int max_n, int conjecture_n, bool full_sn, int jobs) {
    CheckMatrix m;
    for (int n = 2; n <= std::min(max_n, 13); ++n) {
        try {
            BruteRow row = brute_force_table(n, jobs);
            bool ok = BigInt(row.G) == g_count(n) &&
                      BigInt(row.S) == sum_orbit_sizes(n, GrammarVariant::Saturated) &&
                      row.RG == static_cast<long long>(
                                    count_classes(n, GrammarVariant::Full, jobs)) &&
                      row.RS == static_cast<long long>(
                                    count_classes(n, GrammarVariant::Saturated, jobs)) &&
                      row.R == static_cast<long long>(count_classes(
                                   n, GrammarVariant::SaturatedModuloReflection, jobs));
            std::cout << "      n=" << n << " G=" << row.G << " S=" << row.S
                      << " RG=" << row.RG << " RS=" << row.RS << " R=" << row.R
                      << (row.classes_by_permutation_search ? "" : " (classes via sentences)")
                      << "\n";
            m.report("brute-force table vs generator, n=" + std::to_string(n), ok);
        } catch (const resource_limit_error& e) {
            m.skip("brute-force table, n=" + std::to_string(n), e.what());
        }
    }
    for (int n = 2; n <= std::min(max_n, 6); ++n) {
        const Layer f = first_layer_parberry(n);
        std::vector<Network> nets;
        for_each_second_layer(n, [&](const Layer& l2) { nets.push_back({n, {f, l2}}); });
        std::vector<std::string> sentences;
        std::vector<NetworkGraph> graphs;
        for (const Network& net : nets) {
            sentences.push_back(sentence_to_string(sentence_of(net)));
            graphs.push_back(to_graph(net));
        }
        bool ok = true;
        for (std::size_t i = 0; i < nets.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < nets.size() && ok; ++j) {
                bool by_word = sentences[i] == sentences[j];
                bool by_perm = equivalent_brute(nets[i], nets[j], full_sn && n <= 6);
                bool by_iso = graphs_isomorphic(graphs[i], graphs[j]);
                ok = by_word == by_perm && by_perm == by_iso;
            }
        }
        m.report("equivalence = word = graph isomorphism, n=" + std::to_string(n), ok);
    }
    for (int n = 2; n <= std::min(max_n, 10); ++n) {
        const Layer f = first_layer_parberry(n);
        bool ok = true;
        for_each_second_layer(n, [&](const Layer& l2) {
            if (!ok) return;
            Network net{n, {f, l2}};
            bool sem = is_saturated_semantic(net);
            bool syn = is_saturated_syntactic(net);
            bool word = word_saturation_check(sentence_of(net));
            ok = sem == syn && syn == word;
        });
        m.report("saturation checks agree, n=" + std::to_string(n), ok);
    }
    for (int n = 2; n <= std::min(conjecture_n, 10); ++n) {
        try {
            ConjectureResult res = check_conjecture(n);
            if (!res.holds)
                for (auto& [a, b] : res.counterexamples)
                    std::cout << "      counterexample: outputs(" << b
                              << ") inside permuted outputs(" << a << ")\n";
            m.report("no subsumption among saturated classes, n=" + std::to_string(n),
                     res.holds);
        } catch (const resource_limit_error& e) {
            m.skip("conjecture check, n=" + std::to_string(n), e.what());
        }
    }
    return m.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-layer comparator-network prefix generator"};
    app.require_subcommand(1);

    int n = 0, jobs = 1, max_n = 14, conjecture_n = 8;
    std::string set = "R", path, sentence, out;
    bool pretty = false, full_sn = false;
    TableBudgets budgets;

    CLI::App* list = app.add_subcommand("list", "list canonical sentences, one per line");
    list->add_option("--n", n, "channel count")->required();
    list->add_option("--set", set, "class set: RG, RS or R")->check(CLI::IsMember({"RG", "RS", "R"}));
    list->add_option("--jobs", jobs, "worker threads");
    list->add_option("--out,-o", out, "output file (default stdout)");

    CLI::App* count = app.add_subcommand("count", "count classes or labeled networks");
    count->add_option("--n", n, "channel count")->required();
    count->add_option("--set", set, "G, S, RG, RS or R")
        ->check(CLI::IsMember({"G", "S", "RG", "RS", "R"}));
    count->add_option("--jobs", jobs, "worker threads");

    CLI::App* table = app.add_subcommand("table", "print the count table as CSV");
    table->add_option("--max", max_n, "last n")->required();
    table->add_option("--s-max", budgets.s_max, "orbit-sum budget for S");
    table->add_option("--rg-max", budgets.rg_max, "generator budget for RG");
    table->add_option("--rs-max", budgets.rs_max, "generator budget for RS");
    table->add_option("--r-max", budgets.r_max, "generator budget for R");
    table->add_option("--jobs", budgets.jobs, "worker threads");
    table->add_flag("--pretty", pretty, "aligned human-readable layout");

    CLI::App* verify = app.add_subcommand("verify", "run brute-force cross-checks");
    verify->add_option("--max-n", max_n, "oracle bound")->default_val(6);
    verify->add_option("--conjecture", conjecture_n, "subsumption-check bound")->default_val(8);
    verify->add_flag("--full-sn", full_sn, "validate with unrestricted permutation search");
    verify->add_option("--jobs", jobs, "worker threads");

    CLI::App* word = app.add_subcommand("word", "canonical sentence of a network file");
    word->add_option("file", path, "network file, or - for stdin")->required();

    CLI::App* net = app.add_subcommand("net", "network file of a sentence");
    net->add_option("--n", n, "channel count")->required();
    net->add_option("sentence", sentence, "canonical sentence")->required();

    CLI::App* refl = app.add_subcommand("reflect", "reflected sentence");
    refl->add_option("sentence", sentence, "canonical sentence")->required();

    CLI::App* exp = app.add_subcommand("export", "write one network file per class");
    exp->add_option("--n", n, "channel count")->required();
    exp->add_option("--set", set, "class set: RG, RS or R")->check(CLI::IsMember({"RG", "RS", "R"}));
    exp->add_option("--jobs", jobs, "worker threads");
    exp->add_option("--out,-o", out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) return cmd_list(n, set, jobs, out);
        if (count->parsed()) return cmd_count(n, set, jobs);
        if (table->parsed()) return cmd_table(max_n, budgets, pretty);
        if (verify->parsed()) return cmd_verify(max_n, conjecture_n, full_sn, jobs);
        if (word->parsed()) return cmd_word(path);
        if (net->parsed()) return cmd_net(n, sentence);
        if (refl->parsed()) return cmd_reflect(sentence);
        if (exp->parsed()) return cmd_export(n, set, jobs, out);
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
