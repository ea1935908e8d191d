#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "absorb/enumeration.hpp"
#include "absorb/predicates.hpp"

namespace absorb {

/// n = p^k for a prime p, or n = 2p^k for an odd prime p (k >= 1).
bool is_pk_or_2pk(long long n);
/// e.g. "2^2*3"; "1" for n = 1.
std::string factorization(long long n);

struct ZnRow {
    long long n = 0;
    std::string factorization;
    bool gsdf = false;
    bool predicted = false;
    bool match() const { return gsdf == predicted; }
    /// Failing tuple of the zero submodule when gsdf is false.
    std::optional<Witness> witness;
};

struct ZnClassification {
    int max_n = 0;
    std::vector<ZnRow> rows;
    std::size_t mismatches() const;
};

/// gsdf of (0) in the Z-module Z_n against is_pk_or_2pk, for 2 <= n <= max_n.
ZnClassification classify_zn(int max_n, unsigned jobs = 1);

/// Family bounds. Unset fields take the suite's default.
struct SuiteParams {
    std::optional<int> max_n;
    std::optional<int> max_ab;
    unsigned jobs = 1;
};

struct SuiteViolation {
    std::string description;
    PropertyReport report;
};

/// A reproduction of a specific counterexample or instance.
struct SuiteConfirmation {
    std::string description;
    bool confirmed = false;
};

struct SuiteReport {
    std::string suite_id;
    /// The statement checked, quoted.
    std::string anchor;
    std::uint64_t instances_checked = 0;
    std::vector<SuiteViolation> violations;
    std::vector<SuiteConfirmation> confirmations;
    /// Recorded observations that are not asserted.
    std::vector<std::string> notes;
    std::chrono::milliseconds elapsed{0};
    /// Effective family bounds, as name=value pairs.
    std::vector<std::pair<std::string, std::string>> parameters;

    bool passed() const;
};

/// Suite ids in catalog order.
const std::vector<std::string>& suite_catalog();
/// Throws Error(unknown_suite) for an id outside the catalog.
SuiteReport run_suite(const std::string& suite_id, const SuiteParams& params = {});

/// gsdf decided by the defining triple loop over u, v, x with k swept
/// 1..|R|, using only module operations.
bool naive_gsdf(const Submodule& n);

/// Calls fn(0..count-1) on up to `jobs` threads; results keep index order.
template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned jobs,
                            const std::function<T(std::size_t)>& fn) {
    std::vector<std::optional<T>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    auto work = [&](unsigned worker, unsigned stride) {
        for (std::size_t i = worker; i < count; i += stride) {
            try {
                slots[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned stride = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (stride == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < stride; ++w) pool.emplace_back(work, w, stride);
        for (auto& t : pool) t.join();
    }
    std::vector<T> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

}  // namespace absorb
