#pragma once

#include <string>
#include <vector>

#include "entwine/catalogue.hpp"

namespace instances {

struct Instance {
  std::string name;
  entwine::Params params;

  std::string label() const {
    std::string s = name;
    for (const auto& [k, v] : params) s += " " + k + "=" + v;
    return s;
  }
};

// Every catalogue entry under the parameter choices the tests care about,
// over Q and GF(7).
inline std::vector<Instance> all() {
  std::vector<Instance> out;
  for (const std::string field : {"Q", "GF(7)"}) {
    for (const std::string group : {"Z2", "Z3", "S3"})
      for (const std::string name :
           {"group-algebra", "dual-group-algebra", "trivial-hopf-galois", "group-coextension", "ground-comodule"})
        out.push_back({name, {{"field", field}, {"group", group}}});
    out.push_back({"sweedler-h4", {{"field", field}}});
    out.push_back({"quadratic-field-extension", {{"field", field}}});
    out.push_back({"quadratic-field-extension", {{"field", field}, {"d", "0"}}});
    out.push_back({"quadratic-field-extension", {{"field", field}, {"d", "1"}}});
    out.push_back({"coset-coideal", {{"field", field}}});
    out.push_back({"coset-coideal", {{"field", field}, {"group", "Z4"}}});
    out.push_back({"flip-entwining", {{"field", field}, {"group", "Z2"}}});
    out.push_back({"flip-entwining", {{"field", field}, {"group", "Z3"}, {"algebra", "ground"}}});
    out.push_back({"comatrix-extension", {{"field", field}}});
  }
  return out;
}

}  // namespace instances
