// Acceptance suite: runs every verification criterion and prints one
// pass/fail line per criterion. Exit code 0 iff everything passed.

#include <cstdio>

#include "dexsym/verify.hpp"

int main() {
    using namespace dexsym::verify;
    VerifyReport rep;
    try {
        rep = run_verification();
    } catch (const std::exception& e) {
        std::printf("FAIL suite aborted: %s\n", e.what());
        return 1;
    }

    int failed = 0;
    for (const auto& c : rep.criteria) {
        std::size_t ok = 0;
        for (const auto& ck : c.checks) {
            if (ck.status == CheckStatus::Pass) ++ok;
        }
        std::printf("%s %-28s %zu/%zu checks: %s\n", c.passed() ? "PASS" : "FAIL",
                    c.id.c_str(), ok, c.checks.size(), c.title.c_str());
        if (!c.passed()) {
            ++failed;
            for (const auto& ck : c.checks) {
                if (ck.status != CheckStatus::Pass) {
                    std::printf("       failing check: %s (%s) %s\n", ck.id.c_str(),
                                ck.claim.c_str(), ck.details.c_str());
                }
            }
        }
    }
    std::printf("%d of %zu criteria failed (catalog digest %s)\n", failed,
                rep.criteria.size(), rep.catalog_digest.c_str());
    return failed == 0 ? 0 : 1;
}
