#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "entwine/document.hpp"

namespace entwine {

enum class Suite { structures, entwining, galois, cogalois, cogenerate, all };

/// Throws std::invalid_argument.
Suite parse_suite(std::string_view name);
std::string_view to_string(Suite s);

struct RunOptions {
  std::optional<std::size_t> cutoff;  // cogenerate; default dim C + 1
};

/// Runs every check of a suite against the document. Mathematical failures
/// become failing checks; a missing input throws MissingSection. `all` runs
/// each suite whose inputs are present and skips the rest.
Report run_suite(const Document& d, Suite s, const RunOptions& options = {});

/// Canonical JSON: suite, verdict, checks with anchors and residuals, facts,
/// artifacts as sparse matrices.
std::string render_json(const Report& r, const Field& f);
std::string render_text(const Report& r, const Field& f);

}  // namespace entwine
