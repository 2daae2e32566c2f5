#include "entwine/report.hpp"

namespace entwine {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

bool Report::passed() const {
  for (const auto& c : checks_)
    if (!c.passed()) return false;
  return true;
}

const Check* Report::find(std::string_view id) const {
  for (const auto& c : checks_)
    if (c.id == id) return &c;
  return nullptr;
}

bool Report::passed(std::string_view id) const {
  const Check* c = find(id);
  return c != nullptr && c->status == Status::pass;
}

const FactValue* Report::fact(std::string_view key) const {
  for (const auto& [k, v] : facts_)
    if (k == key) return &v;
  return nullptr;
}

const Matrix* Report::artifact(std::string_view key) const {
  for (const auto& [k, v] : artifacts_)
    if (k == key) return &v;
  return nullptr;
}

bool Report::identity(std::string id, std::string anchor, const Matrix& lhs, const Matrix& rhs) {
  Check c{std::move(id), std::move(anchor), Status::pass, std::nullopt, {}};
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    c.status = Status::fail;
    c.detail = "shape mismatch: " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " vs " +
               std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols());
  } else {
    Matrix residual = lhs - rhs;
    if (!residual.is_zero()) {
      c.status = Status::fail;
      c.detail = std::to_string(residual.nonzero_count()) + " nonzero residual entries";
    }
    c.residual = std::move(residual);
  }
  bool ok = c.status == Status::pass;
  checks_.push_back(std::move(c));
  return ok;
}

bool Report::flag(std::string id, std::string anchor, bool ok, std::string detail) {
  checks_.push_back({std::move(id), std::move(anchor), ok ? Status::pass : Status::fail, std::nullopt,
                     std::move(detail)});
  return ok;
}

void Report::skip(std::string id, std::string anchor, std::string reason) {
  checks_.push_back({std::move(id), std::move(anchor), Status::skipped, std::nullopt, std::move(reason)});
}

void Report::set_fact(std::string key, FactValue value) {
  for (auto& [k, v] : facts_)
    if (k == key) {
      v = std::move(value);
      return;
    }
  facts_.emplace_back(std::move(key), std::move(value));
}

void Report::set_artifact(std::string key, Matrix value) {
  for (auto& [k, v] : artifacts_)
    if (k == key) {
      v = std::move(value);
      return;
    }
  artifacts_.emplace_back(std::move(key), std::move(value));
}

void Report::absorb(const Report& other, std::string_view prefix) {
  std::string p(prefix);
  for (const auto& c : other.checks_) {
    Check copy = c;
    copy.id = p + copy.id;
    checks_.push_back(std::move(copy));
  }
  for (const auto& [k, v] : other.facts_) set_fact(p + k, v);
  for (const auto& [k, v] : other.artifacts_) set_artifact(p + k, v);
}

}  // namespace entwine
