#pragma once

// Exhaustive invariant sweeps over small genus and degree, grouped in families.

#include <string>
#include <string_view>
#include <vector>

namespace symtaut {

enum class VerifyScope { All, Ring, Filtration, Classes, Faces };

std::string_view to_string(VerifyScope s);
VerifyScope parse_verify_scope(std::string_view text);

struct VerifyBounds {
    int max_genus = 5;
    int max_degree = 10;
};

struct CheckResult {
    std::string family;
    std::string name;
    long cases = 0;
    long failures = 0;
    std::string first_failure;

    bool passed() const noexcept { return failures == 0 && cases > 0; }
};

/// Families run concurrently; results come back in a fixed order.
std::vector<CheckResult> run_verification(VerifyScope scope, const VerifyBounds& bounds);

std::vector<CheckResult> verify_ring(const VerifyBounds& bounds);
std::vector<CheckResult> verify_filtration(const VerifyBounds& bounds);
std::vector<CheckResult> verify_classes(const VerifyBounds& bounds);
std::vector<CheckResult> verify_faces(const VerifyBounds& bounds);

}  // namespace symtaut
