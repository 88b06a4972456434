// Command-line front end: normal forms, verification suites, and the block
// decomposition report. Exit codes: 0 pass, 1 verification failure, 2 usage
// or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ayh/io.hpp"
#include "ayh/suites.hpp"

using namespace ayh;

namespace {

std::string read_input(const std::string& word, const std::string& path) {
    if (!word.empty()) return word;
    if (path.empty() || path == "-") {
        std::string all((std::istreambuf_iterator<char>(std::cin)),
                        std::istreambuf_iterator<char>());
        return all;
    }
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open input file '" + path + "'");
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

int run_nf(const std::string& algebra, int r, int n, const std::string& input, bool text) {
    if (algebra == "Y") {
        YAlgebra Y(r, n);
        YElem e = eval_y_word(Y, input);
        std::cout << (text ? e.str() : to_json(e).dump(2)) << "\n";
    } else if (algebra == "Hhat" || algebra == "H") {
        HhatA A(r, n);
        GenWord word = parse_hhat_word(input, r, n, algebra == "Hhat");
        HhatElem<LaurentZ> e = A.nf(word);
        std::cout << (text ? e.str() : to_json(e, algebra).dump(2)) << "\n";
    } else if (algebra == "AH") {
        AffineHecke H(n);
        BernsteinElem e = eval_ah_word(H, input);
        std::cout << (text ? e.str() : to_json(e).dump(2)) << "\n";
    } else {
        throw parse_error("--algebra must be one of Y, H, Hhat, AH");
    }
    return 0;
}

int report(const std::vector<RelationCheck>& checks) {
    int failures = 0;
    for (const auto& c : checks) {
        std::cout << (c.pass ? "pass  " : "FAIL  ") << c.name << "\n";
        failures += c.pass ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations around affine Yokonuma-Hecke algebras"};
    app.require_subcommand(1);

    std::string algebra = "Hhat", word, in_path;
    int r = 2, n = 2;
    bool text = false, json_out = false;
    auto* nf = app.add_subcommand("nf", "normal form of a generator word");
    nf->add_option("--algebra", algebra, "Y | H | Hhat | AH");
    nf->add_option("--r", r, "number of framing values");
    nf->add_option("--n", n, "number of strands");
    nf->add_option("word", word, "generator word, e.g. \"g1 g1\" or \"t1 h1\"");
    nf->add_option("--in", in_path, "read the word from a file ('-' for stdin)");
    nf->add_flag("--text", text, "canonical text output");
    nf->add_flag("--json", json_out, "JSON output (default)");

    std::string suite;
    uint64_t seed = 1;
    int samples = 100, maxlen = 3, max_deg = 1, guard = 10;
    long long window = 1;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify
        ->add_option("suite", suite,
                     "relations-Y | relations-Hhat | iso-roundtrip | tau-identities | kl | cellular")
        ->required();
    verify->add_option("--r", r, "number of framing values");
    verify->add_option("--n", n, "number of strands");
    verify->add_option("--seed", seed, "PRNG seed");
    verify->add_option("--samples", samples, "number of random samples");
    verify->add_option("--maxlen", maxlen, "length bound for enumerations");
    verify->add_option("--max-deg", max_deg, "X-degree bound for random elements");
    verify->add_option("--window", window, "pi-exponent window for enumerations");
    verify->add_option("--guard", guard, "hard bound for enumerations");

    auto* blocks = app.add_subcommand("blocks", "block decomposition table");
    blocks->add_option("--r", r, "number of framing values");
    blocks->add_option("--n", n, "number of strands");

    CLI11_PARSE(app, argc, argv);

    try {
        if (nf->parsed())
            return run_nf(algebra, r, n, read_input(word, in_path), text && !json_out);

        if (verify->parsed()) {
            if (suite == "relations-Y") return report(suite_relations_y(r, n));
            if (suite == "relations-Hhat") return report(suite_relations_hhat(r, n));
            if (suite == "iso-roundtrip")
                return report(suite_iso_roundtrip(r, n, seed, samples, max_deg));
            if (suite == "tau-identities") return report(suite_tau_identities(r, n));
            if (suite == "kl") {
                std::string table;
                auto checks = suite_kl(n, std::min(maxlen, guard), window, &table);
                std::cout << table;
                return report(checks);
            }
            if (suite == "cellular") return report(suite_cellular(seed, samples));
            std::cerr << "unknown suite '" << suite << "'\n";
            return 2;
        }

        if (blocks->parsed()) {
            std::cout << "lam0      n_lam  block sizes\n";
            for (const auto& [rep, n_lam, counts] : block_decompose(r, n)) {
                std::string sizes;
                for (size_t i = 0; i < counts.size(); ++i)
                    sizes += (i ? "," : "") + std::to_string(counts[i]);
                std::cout << rep.str() << "  " << n_lam << "  (" << sizes << ")\n";
            }
            bool ok = rank_identity_holds(r, n);
            long long rank = factorial(n);
            for (int i = 0; i < n; ++i) rank = checked_mul(rank, r);
            std::cout << "rank identity: sum n_lam^2 * prod n_i! == r^n n! = " << rank << "  "
                      << (ok ? "pass" : "FAIL") << "\n";
            return ok ? 0 : 1;
        }
    } catch (const parse_error& ex) {
        std::cerr << "parse error";
        if (ex.position >= 0) std::cerr << " at position " << ex.position;
        std::cerr << ": " << ex.what() << "\n";
        return 2;
    } catch (const guard_error& ex) {
        std::cerr << "guard exceeded: " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "invalid input: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 2;
}
