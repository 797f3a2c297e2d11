#include "mobius0/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mobius0/errors.hpp"
#include "mobius0/series_io.hpp"

namespace mobius0 {

  using nlohmann::json;

  namespace {

    std::string const& require_string(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key) || !j.at(key).is_string()) {
        throw SpecError(std::string("expected string field \"") + key + "\" in "
                        + j.dump());
      }
      return j.at(key).get_ref<std::string const&>();
    }

    std::size_t require_count(json const& j, char const* key) {
      if (!j.contains(key) || !j.at(key).is_number_integer()
          || j.at(key).get<long long>() < 0) {
        throw SpecError(std::string("expected nonnegative integer field \"")
                        + key + "\" in " + j.dump());
      }
      return j.at(key).get<std::size_t>();
    }

    std::vector<std::string> string_list(json const& j, char const* what) {
      if (!j.is_array()) {
        throw SpecError(std::string(what) + " must be an array of strings");
      }
      std::vector<std::string> out;
      for (auto const& e : j) {
        if (!e.is_string()) {
          throw SpecError(std::string(what) + " must be an array of strings");
        }
        out.push_back(e.get<std::string>());
      }
      return out;
    }

  }  // namespace

  MonoidPtr monoid_from_json(json const& j) {
    auto const& type = require_string(j, "type");
    if (type == "free" || type == "free-commutative") {
      if (!j.contains("alphabet")) {
        throw SpecError("monoid of type " + type + " needs an alphabet");
      }
      Alphabet a(string_list(j.at("alphabet"), "alphabet"));
      return type == "free" ? free_monoid(std::move(a))
                            : free_commutative_monoid(std::move(a));
    }
    if (type == "adjoin-zero") {
      if (!j.contains("base")) {
        throw SpecError("adjoin-zero needs a base");
      }
      return adjoin_zero(monoid_from_json(j.at("base")));
    }
    if (type == "rees") {
      if (!j.contains("base") || !j.contains("ideal")) {
        throw SpecError("rees needs a base and an ideal");
      }
      auto base = monoid_from_json(j.at("base"));
      auto kind = ideal_kind_from_json(j.at("ideal"), base->alphabet());
      return rees_quotient(IdealSpec(std::move(kind), std::move(base)));
    }
    throw SpecError("unknown monoid type \"" + type + "\"");
  }

  json monoid_to_json(ZeroMonoid const& m) {
    return json::parse(m.description());
  }

  IdealKind ideal_kind_from_json(json const& j, Alphabet const& alphabet) {
    auto const& kind = require_string(j, "kind");
    if (kind == "repeated-letter") {
      return repeated_letter();
    }
    if (kind == "min-length") {
      return min_length(require_count(j, "n"));
    }
    if (kind == "degree-at-least") {
      return degree_at_least(require_count(j, "d"));
    }
    if (kind == "generated") {
      if (!j.contains("words") || !j.at("words").is_array()) {
        throw SpecError("generated ideal needs a \"words\" array");
      }
      std::vector<std::vector<letter_type>> words;
      for (auto const& w : j.at("words")) {
        std::vector<letter_type> letters;
        for (auto const& name : string_list(w, "generator")) {
          letters.push_back(alphabet.index(name));
        }
        words.push_back(std::move(letters));
      }
      return generated(std::move(words));
    }
    if (kind == "ev-preimage") {
      if (!j.contains("inner")) {
        throw SpecError("ev-preimage ideal needs an inner ideal");
      }
      return ev_preimage(ideal_kind_from_json(j.at("inner"), alphabet));
    }
    throw SpecError("unknown ideal kind \"" + kind + "\"");
  }

  json ideal_kind_to_json(IdealKind const& kind, Alphabet const& alphabet) {
    json j;
    if (std::holds_alternative<ideal::RepeatedLetter>(kind.kind)) {
      j["kind"] = "repeated-letter";
    } else if (auto const* k = std::get_if<ideal::MinLength>(&kind.kind)) {
      j["kind"] = "min-length";
      j["n"]    = k->n;
    } else if (auto const* k = std::get_if<ideal::DegreeAtLeast>(&kind.kind)) {
      j["kind"] = "degree-at-least";
      j["d"]    = k->d;
    } else if (auto const* k = std::get_if<ideal::Generated>(&kind.kind)) {
      j["kind"]  = "generated";
      j["words"] = json::array();
      for (auto const& w : k->words) {
        json letters = json::array();
        for (auto l : w) {
          letters.push_back(alphabet[l]);
        }
        j["words"].push_back(std::move(letters));
      }
    } else if (auto const* k = std::get_if<ideal::EvPreimage>(&kind.kind)) {
      j["kind"]  = "ev-preimage";
      j["inner"] = ideal_kind_to_json(*k->inner, alphabet);
    }
    return j;
  }

  json load_json_argument(std::string const& arg) {
    auto first = arg.find_first_not_of(" \t\r\n");
    std::string text;
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
      text = arg;
    } else {
      std::ifstream in(arg);
      if (!in) {
        throw SpecError("cannot read \"" + arg + "\"");
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      throw SpecError(std::string("invalid JSON: ") + e.what());
    }
  }

  json report_to_json(CheckReport const& report) {
    json j;
    j["name"] = report.name;
    j["pass"] = report.passed();
    if (auto c = report.counterexample()) {
      j["counterexample"] = *c;
    }
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Series
  ////////////////////////////////////////////////////////////////////////

  json series_to_json(Series<Integer> const& f) {
    json j;
    j["truncation"] = f.truncation();
    j["terms"]      = json::array();
    auto const& m   = f.monoid();
    for (auto const& [w, c] : f.sorted_terms()) {
      json letters = json::array();
      for (auto l : m.spell(w)) {
        letters.push_back(m.alphabet()[l]);
      }
      j["terms"].push_back(json::array({c.str(), std::move(letters)}));
    }
    return j;
  }

  Series<Integer> series_from_json(json const&                j,
                                   MonoidPtr const&           m,
                                   std::optional<std::size_t> max_truncation) {
    if (!j.is_object()) {
      throw SpecError("series must be a JSON object");
    }
    auto n = require_count(j, "truncation");
    if (max_truncation) {
      n = std::min(n, *max_truncation);
    }
    if (!j.contains("terms") || !j.at("terms").is_array()) {
      throw SpecError("series needs a \"terms\" array");
    }
    std::vector<std::pair<Word, Integer>> terms;
    for (auto const& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 2) {
        throw SpecError("series term must be [coefficient, [letters...]]: "
                        + t.dump());
      }
      Integer c;
      if (t[0].is_string()) {
        try {
          c = Integer(t[0].get<std::string>());
        } catch (std::exception const&) {
          throw SpecError("invalid coefficient " + t[0].dump());
        }
      } else if (t[0].is_number_integer()) {
        c = t[0].get<long long>();
      } else {
        throw SpecError("invalid coefficient " + t[0].dump());
      }
      terms.emplace_back(m->from_names(string_list(t[1], "word")), std::move(c));
    }
    return Series<Integer>(m, n, terms);
  }

  std::string to_text(Series<Integer> const& f) {
    auto const& m = f.monoid();
    std::string out;
    for (auto const& [w, c] : f.sorted_terms()) {
      bool const     negative = c < 0;
      Integer const  mag      = negative ? Integer(-c) : c;
      bool const     identity = m.order_no_checks(w) == 0;
      if (out.empty()) {
        out = negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
      if (identity) {
        out += mag.str();
      } else if (mag == 1) {
        out += m.render(w);
      } else {
        out += mag.str() + "*" + m.render(w);
      }
    }
    return out.empty() ? "0" : out;
  }

}  // namespace mobius0
