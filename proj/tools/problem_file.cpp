#include "problem_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace icis::cli {

namespace {

std::string join_errors(const std::vector<std::string>& errors) {
  std::string out = "malformed problem file:";
  for (const auto& e : errors) out += "\n  " + e;
  return out;
}

class Decoder {
 public:
  ProblemSpec decode(const Json& doc) {
    ProblemSpec spec;
    if (!doc.is_object()) {
      fail("", "document must be a JSON object");
      throw FormatError(errors_);
    }
    for (const auto& [key, value] : doc.items()) {
      if (key != "mode" && key != "variables" && key != "rank" && key != "map" && key != "collections")
        fail("/" + key, "unknown key");
    }

    if (!doc.contains("mode")) {
      fail("/mode", "missing (expected \"smooth\" or \"icis\")");
    } else if (const auto& mode = doc["mode"]; mode == "smooth") {
      spec.mode = Mode::smooth;
    } else if (mode == "icis") {
      spec.mode = Mode::icis;
    } else {
      fail("/mode", "must be \"smooth\" or \"icis\"");
    }

    if (!doc.contains("variables") || !doc["variables"].is_array()) {
      fail("/variables", "missing or not an array of names");
    } else {
      std::vector<std::string> names;
      bool ok = true;
      for (std::size_t j = 0; j < doc["variables"].size(); ++j) {
        const auto& v = doc["variables"][j];
        if (!v.is_string()) {
          fail("/variables/" + std::to_string(j), "must be a string");
          ok = false;
        } else {
          names.push_back(v.get<std::string>());
        }
      }
      if (ok) {
        try {
          spec.ring = Ring::make(std::move(names));
        } catch (const std::invalid_argument& e) {
          fail("/variables", e.what());
        }
      }
    }

    if (doc.contains("rank")) {
      const auto& rank = doc["rank"];
      if (!rank.is_number_unsigned() || rank.get<std::uint64_t>() > 1'000'000)
        fail("/rank", "must be a non-negative integer");
      else
        spec.rank = rank.get<unsigned>();
    }

    if (!spec.ring) throw FormatError(errors_);

    if (doc.contains("map")) {
      const auto& map = doc["map"];
      if (!map.is_array()) {
        fail("/map", "must be an array of polynomial strings");
      } else {
        for (std::size_t r = 0; r < map.size(); ++r)
          if (auto p = polynomial(map[r], "/map/" + std::to_string(r), spec.ring)) spec.map.push_back(*p);
      }
    }

    if (!doc.contains("collections") || !doc["collections"].is_array()) {
      fail("/collections", "missing or not an array");
    } else {
      const auto& cols = doc["collections"];
      for (std::size_t i = 0; i < cols.size(); ++i) spec.collections.push_back(collection(cols[i], i, spec.ring));
    }

    if (!errors_.empty()) throw FormatError(errors_);
    return spec;
  }

 private:
  void fail(const std::string& pointer, const std::string& message) {
    errors_.push_back((pointer.empty() ? std::string("/") : pointer) + ": " + message);
  }

  std::optional<Polynomial> polynomial(const Json& value, const std::string& pointer, const RingPtr& ring) {
    if (!value.is_string()) {
      fail(pointer, "must be a polynomial string");
      return std::nullopt;
    }
    try {
      return parse_polynomial(value.get<std::string>(), ring);
    } catch (const ParseError& e) {
      fail(pointer, e.what());
      return std::nullopt;
    }
  }

  CollectionSpec collection(const Json& value, std::size_t i, const RingPtr& ring) {
    const auto base = "/collections/" + std::to_string(i);
    CollectionSpec c;
    if (!value.is_object()) {
      fail(base, "must be an object with keys k and members");
      return c;
    }
    for (const auto& [key, v] : value.items())
      if (key != "k" && key != "members") fail(base + "/" + key, "unknown key");
    if (!value.contains("k") || !value["k"].is_number_unsigned() || value["k"].get<std::uint64_t>() > 1'000'000)
      fail(base + "/k", "missing or not a non-negative integer");
    else
      c.k = value["k"].get<unsigned>();

    if (!value.contains("members") || !value["members"].is_array()) {
      fail(base + "/members", "missing or not an array");
      return c;
    }
    const auto& members = value["members"];
    for (std::size_t j = 0; j < members.size(); ++j) {
      const auto pointer = base + "/members/" + std::to_string(j);
      const auto& m = members[j];
      if (m.is_string()) {
        if (auto form = differential_shorthand(m.get<std::string>(), pointer, ring))
          c.members.push_back(form->coefficients());
      } else if (m.is_array()) {
        std::vector<Polynomial> vec;
        bool ok = true;
        for (std::size_t r = 0; r < m.size(); ++r) {
          auto p = polynomial(m[r], pointer + "/" + std::to_string(r), ring);
          ok &= p.has_value();
          if (p) vec.push_back(*p);
        }
        if (ok) c.members.push_back(std::move(vec));
      } else {
        fail(pointer, "must be an array of polynomial strings or \"d(<polynomial>)\"");
      }
    }
    return c;
  }

  // "d(<polynomial>)" expands to the coefficient vector of the differential.
  std::optional<OneForm> differential_shorthand(const std::string& text, const std::string& pointer,
                                                const RingPtr& ring) {
    const auto open = text.find_first_not_of(" \t");
    const auto close = text.find_last_not_of(" \t");
    if (open == std::string::npos || text[open] != 'd' || close == std::string::npos || text[close] != ')') {
      fail(pointer, "string members must have the form \"d(<polynomial>)\"");
      return std::nullopt;
    }
    const auto paren = text.find_first_not_of(" \t", open + 1);
    if (paren == std::string::npos || text[paren] != '(' || paren >= close) {
      fail(pointer, "string members must have the form \"d(<polynomial>)\"");
      return std::nullopt;
    }
    const auto inner = text.substr(paren + 1, close - paren - 1);
    try {
      return differential(parse_polynomial(inner, ring));
    } catch (const ParseError& e) {
      fail(pointer, std::string("inside d(...), ") + e.what());
      return std::nullopt;
    }
  }

  std::vector<std::string> errors_;
};

Json monomial_list(const std::vector<Monomial>& monomials, const Ring& ring) {
  Json out = Json::array();
  for (const auto& m : monomials) out.push_back(m.to_string(ring));
  return out;
}

}  // namespace

FormatError::FormatError(std::vector<std::string> errors)
    : std::runtime_error(join_errors(errors)), errors_(std::move(errors)) {}

ProblemSpec decode_problem(const Json& doc) { return Decoder().decode(doc); }

ProblemSpec parse_problem(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError({std::string("byte ") + std::to_string(e.byte) + ": " + e.what()});
  }
  return decode_problem(doc);
}

ProblemSpec read_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError({path.string() + ": cannot open file"});
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

Json encode_result(const IndexResult& result, const Ring& ring, const std::optional<Timings>& timings) {
  Json out;
  if (result.index)
    out["index"] = *result.index;
  else
    out["index"] = "infinite";
  out["generators"] = result.generator_count;
  out["basis_size"] = result.basis_size;
  out["staircase"] = monomial_list(result.staircase, ring);
  out["leading_monomials"] = monomial_list(result.leading_monomials, ring);
  if (result.oracle) {
    Json o;
    o["verdict"] = to_string(result.oracle->agreement);
    o["status"] = oracle::to_string(result.oracle->report.verdict);
    if (result.oracle->report.value)
      o["value"] = *result.oracle->report.value;
    else
      o["value"] = nullptr;
    Json table = Json::array();
    for (const auto& row : result.oracle->report.table) table.push_back({{"degree", row.degree}, {"estimate", row.estimate}});
    o["table"] = std::move(table);
    out["oracle"] = std::move(o);
  }
  if (timings) {
    auto ms = [](double v) { return std::round(v * 1000.0) / 1000.0; };
    out["timings"] = {{"standard_basis_ms", ms(timings->standard_basis_ms)}, {"oracle_ms", ms(timings->oracle_ms)}};
  }
  return out;
}

ExpectedResult decode_expected(const Json& doc) {
  ExpectedResult out;
  std::vector<std::string> errors;
  if (!doc.is_object() || !doc.contains("index")) {
    throw FormatError({"/index: missing"});
  }
  const auto& index = doc["index"];
  if (index == "infinite") {
    out.index = std::nullopt;
  } else if (index.is_number_unsigned()) {
    out.index = index.get<std::uint64_t>();
  } else {
    errors.push_back("/index: must be a non-negative integer or \"infinite\"");
  }
  if (doc.contains("staircase")) {
    if (!doc["staircase"].is_array()) {
      errors.push_back("/staircase: must be an array of monomial strings");
    } else {
      for (const auto& m : doc["staircase"]) {
        if (m.is_string())
          out.staircase.push_back(m.get<std::string>());
        else
          errors.push_back("/staircase: entries must be strings");
      }
    }
  }
  if (!errors.empty()) throw FormatError(std::move(errors));
  return out;
}

Json encode_expected(const IndexResult& result, const Ring& ring) {
  Json out;
  if (result.index)
    out["index"] = *result.index;
  else
    out["index"] = "infinite";
  out["staircase"] = monomial_list(result.staircase, ring);
  return out;
}

}  // namespace icis::cli
