#pragma once

// JSON forms of census and invariant records. Coefficients that do not fit in
// a signed 64-bit integer are written as decimal strings.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <brieskorn/census.hpp>
#include <brieskorn/integer.hpp>
#include <brieskorn/invariants.hpp>
#include <brieskorn/laurent.hpp>

namespace brieskorn {

using json = nlohmann::ordered_json;

inline json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    Rational v = parse_rational(j.get<std::string>());
    if (!is_integer(v)) {
      throw std::invalid_argument("expected an integer, got " + j.dump());
    }
    return boost::multiprecision::numerator(v);
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

inline json to_json(const CensusRecord& r) {
  return json{{"n", r.n}, {"i", r.i}, {"j", r.j}, {"l", r.l}, {"r", r.r}, {"twisting", r.twisting},
              {"rotation", r.rotation}};
}

inline CensusRecord census_record_from_json(const json& j) {
  return {j.at("n").get<std::int64_t>(),        j.at("i").get<std::int64_t>(), j.at("j").get<std::int64_t>(),
          j.at("l").get<std::int64_t>(),        j.at("r").get<std::int64_t>(), j.at("twisting").get<std::int64_t>(),
          j.at("rotation").get<std::int64_t>()};
}

struct InvariantRecord {
  ContactDescriptor descriptor;
  HalfLaurent polynomial;

  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

inline std::vector<InvariantRecord> invariant_table(std::int64_t n) {
  std::vector<InvariantRecord> out;
  for (const auto& d : descriptors(n)) {
    out.push_back({d, invariant(d)});
  }
  return out;
}

/// {n, i, j, monomials: [[doubled_exponent, coefficient], ...]} in ascending exponent order.
inline json to_json(const InvariantRecord& r) {
  json monomials = json::array();
  for (const auto& [e, c] : r.polynomial.terms()) {
    monomials.push_back(json::array({e, integer_to_json(c)}));
  }
  return json{{"n", r.descriptor.n}, {"i", r.descriptor.i}, {"j", r.descriptor.j}, {"monomials", monomials}};
}

inline InvariantRecord invariant_record_from_json(const json& j) {
  InvariantRecord r;
  r.descriptor = {j.at("n").get<std::int64_t>(), j.at("i").get<std::int64_t>(), j.at("j").get<std::int64_t>()};
  for (const auto& m : j.at("monomials")) {
    if (!m.is_array() || m.size() != 2) {
      throw std::invalid_argument("monomial must be [doubled_exponent, coefficient]");
    }
    r.polynomial.add_term(m[0].get<std::int64_t>(), integer_from_json(m[1]));
  }
  return r;
}

}  // namespace brieskorn
