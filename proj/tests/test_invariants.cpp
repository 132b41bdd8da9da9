#include <doctest.h>

#include <algorithm>
#include <set>

#include "tcphonon/invariants.hpp"

using namespace tcphonon;

TEST_SUITE("invariants") {

TEST_CASE("suite on the monotone window")
{
    CheckOptions o;
    o.kmax = 1.0;
    o.mc_samples = 1u << 20;
    const auto results = run_invariant_suite(o);
    std::set<std::string> names;
    for (const CheckResult& r : results) {
        INFO(r.name << " measured " << r.measured << " tol " << r.tolerance);
        CHECK(r.passed);
        names.insert(r.name);
    }
    CHECK(names.size() == results.size());
    for (const char* n : {"spectrum.oracle_agreement", "spectrum.sum_rule_pi", "vertex.lambda_decay_zero_location",
                          "rates.mc_agreement_g_to_2g", "eft.gap_identity", "model.round_trip"}) {
        CHECK(names.count(n) == 1);
    }
}

TEST_CASE("zero tolerance fails named checks")
{
    CheckOptions o;
    o.tolerance_scale = 0.0;
    o.mc_samples = 1u << 16;
    o.k_points = 5;
    const auto results = run_invariant_suite(o);
    const auto failed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed; });
    CHECK(failed > 0);
    for (const CheckResult& r : results) {
        CHECK(r.tolerance == 0.0);
        CHECK(r.passed == (r.measured <= 0.0));
    }
}

TEST_CASE("default window reports the small-cs turnover")
{
    CheckOptions o;
    o.mc_samples = 1u << 16;
    o.k_points = 20;
    const auto results = run_invariant_suite(o);
    for (const CheckResult& r : results) {
        if (r.name.rfind("rates.g_nondecreasing_in_k", 0) == 0) {
            const bool small_cs = r.name.find("cs=0.35") != std::string::npos || r.name.find("cs=0.5]") != std::string::npos;
            CHECK(r.passed == !small_cs);
        }
    }
}

}
