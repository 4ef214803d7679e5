#ifndef SLINK_VERIFY_HPP
#define SLINK_VERIFY_HPP

#include <string>
#include <vector>

#include "slink/braid.hpp"
#include "slink/homology.hpp"

namespace slink {

struct CheckReport {
    std::string check;
    std::string input;
    int n = 0;
    bool pass = false;
    bool expected_open = false;
    std::string witness;

    std::string status() const {
        return expected_open ? "expected-open" : (pass ? "pass" : "fail");
    }
    /// One JSON-lines object with sorted keys.
    std::string json() const;
};

BigradedHomology link_homology(const BraidWord& b, int n);

CheckReport check_d_squared(const BraidWord& b, int n);
CheckReport check_euler(const BraidWord& b, int n);
std::vector<CheckReport> check_moy(int n);
std::vector<CheckReport> check_markov(const BraidWord& b, int n, int variant_budget);
std::vector<CheckReport> check_duality(const BraidWord& b, int n);

/// Every braid word on at most max_strands strands with at most max_crossings
/// letters, strand counts ascending, words in length-then-lex order.
std::vector<BraidWord> corpus_braids(int max_strands, int max_crossings);

struct VerifyOptions {
    int max_crossings = 6;
    int max_strands = 3;
    std::vector<int> ns = {2};
    int workers = 1;
};

/// suite in {d2, euler, moy, markov, duality, all}. Reports come back in a
/// deterministic order independent of the worker count.
std::vector<CheckReport> run_suite(const std::string& suite, const VerifyOptions& opt);

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace slink

#endif
