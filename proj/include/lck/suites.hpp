#ifndef LCK_SUITES_HPP
#define LCK_SUITES_HPP

#include "lck/framefile.hpp"
#include "lck/report.hpp"

namespace lck {

/// Suite identifiers accepted by run_suites.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Suites that make sense for the entry; "all" expands to this list.
std::vector<std::string> applicable_suites(Family family, bool sphere_ring, bool vaisman);

/// Runs one named suite (or "all") on a catalog entry. Intermediate tensors
/// are computed once and shared across the selected suites.
std::vector<SuiteReport> run_suites(const CatalogEntry<Rational>& entry, const std::string& suite);
std::vector<SuiteReport> run_suites(const CatalogEntry<SpherePoly>& entry, const std::string& suite);

/// Custom-entry pipeline: the structure suite always runs first and gates
/// everything else; Lee data is solved (constants ring) or taken from the
/// declared theta, and the Vaisman flag is computed rather than declared.
std::vector<SuiteReport> run_custom(LoadedEntry entry, const std::string& suite);

/// Merges per-suite reports into the single-document form used by the CLI
/// ("all" requests produce checks prefixed with their suite name).
SuiteReport merge_reports(const std::string& example, const std::string& suite,
                          const std::vector<SuiteReport>& reports);

}  // namespace lck

#endif
