#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "entwine/error.hpp"
#include "entwine/matrix.hpp"

namespace entwine {

/// A structure failed one of its defining identities. Carries the offending
/// residual (lhs - rhs) when there is one.
class AxiomViolation : public Error {
 public:
  explicit AxiomViolation(const std::string& what, std::optional<Matrix> residual = std::nullopt)
      : Error(what), residual_(std::move(residual)) {}

  const std::optional<Matrix>& residual() const { return residual_; }

 private:
  std::optional<Matrix> residual_;
};

enum class Status { pass, fail, skipped };

std::string_view to_string(Status s);

/// One verified statement. `anchor` names the identity or property being
/// checked in mathematical form, so a failure points at what broke.
struct Check {
  std::string id;
  std::string anchor;
  Status status = Status::pass;
  std::optional<Matrix> residual;  // lhs - rhs, present for identity checks
  std::string detail;

  bool passed() const { return status != Status::fail; }
};

using FactValue = std::variant<bool, std::int64_t, std::string>;

/// Ordered collection of checks plus the facts and matrices computed along
/// the way. Validators return these instead of throwing.
class Report {
 public:
  Report() = default;
  explicit Report(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::pair<std::string, FactValue>>& facts() const { return facts_; }
  const std::vector<std::pair<std::string, Matrix>>& artifacts() const { return artifacts_; }

  /// No check failed.
  bool passed() const;
  /// nullptr when absent.
  const Check* find(std::string_view id) const;
  bool passed(std::string_view id) const;
  const FactValue* fact(std::string_view key) const;
  const Matrix* artifact(std::string_view key) const;

  /// Records lhs == rhs with the exact residual.
  bool identity(std::string id, std::string anchor, const Matrix& lhs, const Matrix& rhs);
  bool flag(std::string id, std::string anchor, bool ok, std::string detail = {});
  void skip(std::string id, std::string anchor, std::string reason);
  void add(Check check) { checks_.push_back(std::move(check)); }

  void set_fact(std::string key, FactValue value);
  void set_artifact(std::string key, Matrix value);

  /// Appends another report's checks, facts and artifacts, prefixing ids.
  void absorb(const Report& other, std::string_view prefix = {});

 private:
  std::string name_;
  std::vector<Check> checks_;
  std::vector<std::pair<std::string, FactValue>> facts_;
  std::vector<std::pair<std::string, Matrix>> artifacts_;
};

}  // namespace entwine
