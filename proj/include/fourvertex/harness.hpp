#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fourvertex/polygon.hpp"
#include "fourvertex/triangulation.hpp"

namespace fourvertex {

enum class PolygonKind { ConvexGeneric, ConvexGenericCoherent, SimpleNonconvex };

struct GeneratorConfig {
    std::size_t n = 8;
    std::uint64_t seed = 0;
    PolygonKind kind = PolygonKind::ConvexGeneric;
    Rational perturbation = Rational(1, 64);  // fraction of the base radius
    int max_attempts = 500;
};

/// Deterministic rejection sampler: identical config, identical polygon.
/// Draws points at sorted angles on a circle with radial jitter (decimal
/// truncation keeps coordinates exact) and rejects until the kind's
/// predicates hold; generated polygons additionally carry no neighboring
/// radius ties. Throws RejectionBudgetExceeded.
Polygon generate(const GeneratorConfig& cfg);

struct CorpusEntry {
    std::string id;
    std::string provenance;
    std::vector<std::string> x_row;  // original decimal strings, bit-exact
    std::vector<std::string> y_row;

    std::size_t columns() const { return x_row.size(); }
    std::vector<Point> points() const;
    Polygon polygon(Polygon::Normalize norm = Polygon::Normalize::ToCcw) const;
};

/// The six embedded coordinate matrices.
const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& id);

/// One pinned expectation record: `id key=value ...` per line in the
/// fixture file, `diagonal=a,b` for index pairs.
struct PinnedFixture {
    std::string id;
    std::optional<Diagonal> diagonal;
    std::map<std::string, long> expected;

    long at(const std::string& key) const;
};

std::vector<PinnedFixture> load_fixtures(const std::string& path);
const PinnedFixture& fixture_for(const std::vector<PinnedFixture>& all,
                                 const std::string& id);
std::string default_fixture_path();

struct SuiteConfig {
    std::size_t n_min = 4;
    std::size_t n_max = 12;
    std::size_t count = 500;      // convex-generic draws; other pools scale down
    std::uint64_t seed = 20240101;
    std::vector<std::string> tags;  // empty = all
    std::string fixtures_path;      // empty = default_fixture_path()
    /// Corrupt one in-circle answer inside the Bose census and expect the
    /// identities to notice; used to prove the suite can fail.
    bool mutate_incircle = false;
};

struct SuiteWitness {
    std::string description;
    std::string polygon_csv;  // offending polygon, CSV layout
};

struct SuiteEntry {
    std::string tag;
    std::size_t cases = 0;
    std::size_t failures = 0;
    bool skipped = false;
    std::vector<std::string> notes;
    std::vector<SuiteWitness> witnesses;

    bool passed() const { return !skipped && failures == 0; }
};

struct SuiteReport {
    std::vector<SuiteEntry> entries;
    double elapsed_seconds = 0.0;

    bool all_passed() const;
    const SuiteEntry* find(const std::string& tag) const;
};

/// Run every registered theorem/invariant check against generated draws,
/// the embedded corpus, and the pinned fixtures. Failures are report
/// entries with serialized witnesses, never exceptions.
SuiteReport run_suite(const SuiteConfig& cfg);

/// Tags in registration order (for --tags validation and docs).
std::vector<std::string> suite_tags();

}  // namespace fourvertex
