#include "torsionscan/scan.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

#include "torsionscan/errors.hpp"
#include "torsionscan/invariants.hpp"

namespace torsionscan {

namespace {

enum class Outcome { analyzed, nonreflexive, failed };

struct RecordResult {
    Outcome outcome = Outcome::failed;
    FiniteAbelianGroup pi1;
    FiniteAbelianGroup brauer;
    std::string message;
};

RecordResult process(const ParsedRecord& rec) {
    RecordResult res;
    if (!rec.error.empty() || !rec.polytope) {
        res.message = rec.error.empty() ? "record could not be parsed" : rec.error;
        return res;
    }
    const LatticePolytope& p = *rec.polytope;
    if (p.dim() != 4) {
        res.message = "record is " + std::to_string(p.dim()) +
                      "-dimensional, the scan handles dimension 4";
        return res;
    }
    if (!p.is_reflexive()) {
        res.outcome = Outcome::nonreflexive;
        res.message = "not reflexive";
        return res;
    }
    try {
        res.pi1 = fundamental_group(p);
        res.brauer = brauer_group(p);
    } catch (const input_error& e) {
        res.message = e.what();
        return res;
    }
    res.outcome = Outcome::analyzed;
    return res;
}

} // namespace

ScanSummary scan_records(const std::vector<ParsedRecord>& records, unsigned jobs,
                         bool skip_nonreflexive) {
    const std::size_t n = records.size();
    std::vector<RecordResult> results(n);

    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) results[i] = process(records[i]);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::atomic<bool> dead{false};
        std::exception_ptr first_failure;
        std::mutex failure_mutex;
        auto worker = [&]() {
            for (;;) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= n || dead.load()) return;
                try {
                    results[i] = process(records[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!first_failure) first_failure = std::current_exception();
                    dead.store(true);
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        unsigned count = jobs < n ? jobs : static_cast<unsigned>(n);
        pool.reserve(count);
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
        if (first_failure) std::rethrow_exception(first_failure);
    }

    ScanSummary summary;
    summary.total = n;
    summary.nonreflexive_listed = !skip_nonreflexive;
    for (std::size_t i = 0; i < n; ++i) {
        const RecordResult& res = results[i];
        const long long line = records[i].matrix.line;
        switch (res.outcome) {
        case Outcome::analyzed:
            ++summary.analyzed;
            if (!res.pi1.is_trivial()) {
                summary.nontrivial_pi1.push_back(ScanEntry{i, line, res.pi1, res.brauer});
            }
            if (!res.brauer.is_trivial()) {
                summary.nontrivial_brauer.push_back(ScanEntry{i, line, res.pi1, res.brauer});
            }
            break;
        case Outcome::nonreflexive:
            ++summary.nonreflexive_count;
            if (!skip_nonreflexive) {
                summary.nonreflexive.push_back(ScanIssue{i, line, res.message});
            }
            break;
        case Outcome::failed:
            summary.failures.push_back(ScanIssue{i, line, res.message});
            break;
        }
    }
    return summary;
}

std::string scan_summary_json(const ScanSummary& summary) {
    nlohmann::ordered_json j;
    j["total"] = summary.total;
    j["analyzed"] = summary.analyzed;
    j["nonreflexive"] = summary.nonreflexive_count;

    nlohmann::ordered_json pi1 = nlohmann::ordered_json::array();
    for (const ScanEntry& e : summary.nontrivial_pi1) {
        nlohmann::ordered_json item;
        item["index"] = e.index;
        item["line"] = e.line;
        item["pi1"] = group_invariants_json(e.pi1);
        item["brauer"] = group_invariants_json(e.brauer);
        pi1.push_back(std::move(item));
    }
    j["nontrivial_pi1"] = std::move(pi1);

    nlohmann::ordered_json brauer = nlohmann::ordered_json::array();
    for (const ScanEntry& e : summary.nontrivial_brauer) {
        nlohmann::ordered_json item;
        item["index"] = e.index;
        item["line"] = e.line;
        item["pi1"] = group_invariants_json(e.pi1);
        item["brauer"] = group_invariants_json(e.brauer);
        brauer.push_back(std::move(item));
    }
    j["nontrivial_brauer"] = std::move(brauer);

    if (summary.nonreflexive_listed) {
        nlohmann::ordered_json skipped = nlohmann::ordered_json::array();
        for (const ScanIssue& issue : summary.nonreflexive) {
            nlohmann::ordered_json item;
            item["index"] = issue.index;
            item["line"] = issue.line;
            item["error"] = issue.message;
            skipped.push_back(std::move(item));
        }
        j["nonreflexive_records"] = std::move(skipped);
    }

    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const ScanIssue& issue : summary.failures) {
        nlohmann::ordered_json item;
        item["index"] = issue.index;
        item["line"] = issue.line;
        item["error"] = issue.message;
        failures.push_back(std::move(item));
    }
    j["failures"] = std::move(failures);

    return j.dump(2) + "\n";
}

} // namespace torsionscan
