// Command-line front end: quantum polynomials, integer homology tables and
// the verification suites for braid-closure diagrams.

#include <CLI11.hpp>
#include <iostream>
#include <thread>

#include "slink/morphisms.hpp"
#include "slink/statesum.hpp"
#include "slink/verify.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

int default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sl(n) link homology for braid closures"};
    app.require_subcommand(1);

    std::string braid_text;
    int n = 2;
    int max_crossings = 8;
    int workers = default_workers();
    std::string format = "json";

    auto* poly = app.add_subcommand("polynomial", "quantum sl(n) polynomial of a braid closure");
    poly->add_option("braid", braid_text, "braid word, e.g. \"B2: 1 1 1\"")->required();
    poly->add_option("--n", n, "number of colors");

    std::string hbraid;
    int hn = 2, hmax = 8;
    auto* hom = app.add_subcommand("homology", "bigraded integer homology of a braid closure");
    hom->add_option("braid", hbraid, "braid word")->required();
    hom->add_option("--n", hn, "number of colors");
    hom->add_option("--max-crossings", hmax, "crossing budget");

    std::string suite;
    int vmax = 6, vstrands = 3, vn = 2, vworkers = default_workers();
    std::string vformat = "json";
    auto* ver = app.add_subcommand("verify", "run a verification suite over the braid corpus");
    ver->add_option("suite", suite, "one of d2, euler, moy, markov, duality, all")->required();
    ver->add_option("--max-crossings", vmax, "corpus crossing bound");
    ver->add_option("--max-strands", vstrands, "corpus strand bound");
    ver->add_option("--n", vn, "number of colors");
    ver->add_option("--workers", vworkers, "worker thread count");
    ver->add_option("--format", vformat, "json or table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (poly->parsed()) {
            if (n < 1) {
                std::cerr << "error: --n must be at least 1\n";
                return kExitUsage;
            }
            slink::BraidWord b = slink::parse_braid(braid_text);
            std::cout << slink::diagram_bracket(slink::closure(b), n).str() << "\n";
            return 0;
        }
        if (hom->parsed()) {
            if (hn < 1) {
                std::cerr << "error: --n must be at least 1\n";
                return kExitUsage;
            }
            slink::BraidWord b = slink::parse_braid(hbraid);
            if (static_cast<int>(b.letters.size()) > hmax) {
                std::cerr << "error: diagram has " << b.letters.size()
                          << " crossings, over the budget of " << hmax
                          << " (raise with --max-crossings)\n";
                return kExitUsage;
            }
            try {
                std::cout << slink::to_json(slink::link_homology(b, hn)) << "\n";
            } catch (const std::runtime_error& e) {
                std::cerr << "verification failure: " << e.what() << "\n";
                return kExitVerification;
            }
            return 0;
        }
        if (ver->parsed()) {
            if (vformat != "json" && vformat != "table") {
                std::cerr << "error: --format must be json or table\n";
                return kExitUsage;
            }
            slink::VerifyOptions opt;
            opt.max_crossings = vmax;
            opt.max_strands = vstrands;
            opt.ns = {vn};
            opt.workers = vworkers;
            std::vector<slink::CheckReport> reports = slink::run_suite(suite, opt);
            for (const auto& r : reports) {
                if (vformat == "json") {
                    std::cout << r.json() << "\n";
                } else {
                    std::cout << r.check << "\t" << r.input << "\tn=" << r.n << "\t"
                              << r.status();
                    if (!r.witness.empty()) std::cout << "\t" << r.witness;
                    std::cout << "\n";
                }
            }
            return slink::all_passed(reports) ? 0 : kExitVerification;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return 0;
}
