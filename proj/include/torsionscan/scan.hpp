#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "torsionscan/abelian_group.hpp"
#include "torsionscan/io.hpp"

namespace torsionscan {

// A record whose fundamental group or Brauer group turned out nontrivial.
struct ScanEntry {
    std::size_t index = 0;
    long long line = 0;
    FiniteAbelianGroup pi1;
    FiniteAbelianGroup brauer;
};

struct ScanIssue {
    std::size_t index = 0;
    long long line = 0;
    std::string message;
};

struct ScanSummary {
    std::size_t total = 0;
    std::size_t analyzed = 0;
    std::size_t nonreflexive_count = 0;
    bool nonreflexive_listed = true;    // false when records were only counted
    std::vector<ScanIssue> nonreflexive;
    std::vector<ScanEntry> nontrivial_pi1;
    std::vector<ScanEntry> nontrivial_brauer;
    std::vector<ScanIssue> failures; // malformed or otherwise unusable records
};

// Runs the two torsion quotients over every parsed record. Each record is
// taken on the N side, i.e. its own lattice points feed the fundamental
// group N/N' and the Brauer quotient of its family. Records must be
// 4-dimensional and reflexive; others land in `failures` respectively in
// the non-reflexive tally (only counted when skip_nonreflexive is set).
// Work is divided among `jobs` threads; the summary does not depend on the
// thread count.
ScanSummary scan_records(const std::vector<ParsedRecord>& records,
                         unsigned jobs = 1, bool skip_nonreflexive = false);

// Deterministic pretty-printed JSON, arrays ordered by record index.
std::string scan_summary_json(const ScanSummary& summary);

} // namespace torsionscan
