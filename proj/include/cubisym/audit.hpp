#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubisym/catalog.hpp"
#include "cubisym/classifier.hpp"

namespace cubisym {

enum class CheckStatus { Match, KnownDiscrepancy, UnknownDiscrepancy };

std::string to_string(CheckStatus s);

/// One comparison between a transcribed claim and the solver.
struct Check {
  std::string kind;  // stated_dimension, expected_class, generator, invariant_matrix, closed_form, projective_class
  int index = 0;     // 1-based generator number, 0 otherwise
  CheckStatus status = CheckStatus::Match;
  std::string claimed;
  std::string computed;
  std::string resolution;  // ledger text for known discrepancies
  std::optional<Mat3> correction;
};

/// A transcription problem that is expected and resolved by the solver.
struct LedgerEntry {
  std::string id;
  std::string kind;
  int index = 0;
  std::string description;
};

const std::vector<LedgerEntry>& known_discrepancies();

struct EntryReport {
  std::string id;
  std::string sample;
  Params params;
  CubicForm form;
  ClassificationReport classification;
  std::vector<Check> checks;

  bool matches() const;
  bool has_unknown() const;
};

/// Kernel element closest to `target` (most equal entries); `target` itself
/// when it lies in the kernel. Empty basis gives std::nullopt.
std::optional<Mat3> closest_kernel_element(const std::vector<Mat3>& basis, const Mat3& target);

/// Compares one instantiated entry against the solver. The stated dimension is
/// only checked at the default sample, since boundary samples degenerate.
EntryReport verify_entry(const CatalogEntry& entry, const Params& params, const std::string& sample = "default");

/// Every sign branch at default parameters plus each named extra sample.
std::vector<EntryReport> verify_entry_samples(const CatalogEntry& entry);

struct ProjectiveRow {
  std::string id;
  std::string sample;  // "" or "F=..." for the general class
  ClassLabel computed = ClassLabel::Eight;
  ClassLabel published = ClassLabel::Eight;
  Check check;
};

/// All projective classes; the general class once per subclass interval (the
/// two irrational thresholds through exact Q(sqrt 3) rank) plus F = -1/2.
std::vector<ProjectiveRow> projective_rows();

/// Published table rows against the recomputed assignment of ids to classes.
struct ProjectiveTableRow {
  ClassLabel label;
  std::vector<std::string> published;
  std::vector<std::string> computed;
  bool agrees() const { return published == computed; }
};
std::vector<ProjectiveTableRow> projective_table(const std::vector<ProjectiveRow>& rows);

struct AuditReport {
  std::vector<EntryReport> entries;
  std::vector<ProjectiveRow> projective;

  int match_count() const;
  int known_count() const;
  int unknown_count() const;
};

AuditReport verify_all();

nlohmann::json to_json(const Check& c);
nlohmann::json to_json(const EntryReport& r);
nlohmann::json to_json(const AuditReport& r);
nlohmann::json projective_table_json(const std::vector<ProjectiveTableRow>& table);

std::string audit_text(const AuditReport& r);
std::string projective_table_text(const std::vector<ProjectiveTableRow>& table);

}  // namespace cubisym
