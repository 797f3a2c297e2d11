// Command-line front end: Möbius series, star, products, inversion, Hilbert
// prefixes, grade tables and the identity suite over JSON-described monoids.
//
// Exit codes: 0 on success, 1 on invalid input, 2 when `verify` finds a
// failing check.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include <nlohmann/json.hpp>

#include "mobius0/errors.hpp"
#include "mobius0/hilbert.hpp"
#include "mobius0/io.hpp"
#include "mobius0/series.hpp"
#include "mobius0/series_io.hpp"
#include "mobius0/verify.hpp"

namespace {

  using mobius0::Integer;
  using mobius0::Series;
  using nlohmann::json;

  struct Invocation {
    std::string              monoid;
    std::size_t              order = mobius0::default_truncation;
    std::vector<std::string> series;
    std::string              format = "text";
    std::string              side   = "left";
    std::optional<std::size_t> terms;
  };

  void print_series(Series<Integer> const& f, Invocation const& inv) {
    if (inv.format == "json") {
      std::cout << mobius0::series_to_json(f).dump() << '\n';
    } else {
      std::cout << mobius0::to_text(f) << '\n';
    }
  }

  std::vector<Series<Integer>> read_series(Invocation const&         inv,
                                           mobius0::MonoidPtr const& m,
                                           std::size_t               expected) {
    if (inv.series.size() != expected) {
      throw mobius0::SpecError("expected " + std::to_string(expected)
                               + " --series argument(s), got "
                               + std::to_string(inv.series.size()));
    }
    std::vector<Series<Integer>> out;
    for (auto const& arg : inv.series) {
      out.push_back(mobius0::series_from_json(
          mobius0::load_json_argument(arg), m, inv.order));
    }
    return out;
  }

  int run(std::string const& command, Invocation const& inv) {
    auto const spec = mobius0::load_json_argument(inv.monoid);
    auto const m    = mobius0::monoid_from_json(spec);
    auto const n    = inv.order;

    if (command == "mobius") {
      print_series(mobius0::mobius_series(m, n), inv);
    } else if (command == "star") {
      print_series(mobius0::star(read_series(inv, m, 1)[0]), inv);
    } else if (command == "mul") {
      auto s = read_series(inv, m, 2);
      print_series(mobius0::cauchy_product(s[0], s[1]), inv);
    } else if (command == "invert") {
      auto g = read_series(inv, m, 1)[0];
      print_series(inv.side == "right" ? mobius0::mobius_invert_right(g)
                                       : mobius0::mobius_invert_left(g),
                   inv);
    } else if (command == "hilbert") {
      auto h = mobius0::hilbert_prefix(*m, inv.terms.value_or(n));
      if (inv.format == "json") {
        std::cout << json{{"counts", h.counts}}.dump() << '\n';
      } else {
        std::cout << mobius0::to_text(h) << '\n';
      }
    } else if (command == "count") {
      json grades = json::array();
      for (std::size_t k = 0; k <= inv.terms.value_or(n); ++k) {
        auto  elements = m->elements_of_order(k);
        json  words    = json::array();
        std::string line;
        for (auto const& w : elements) {
          json letters = json::array();
          for (auto l : m->spell(w)) {
            letters.push_back(m->alphabet()[l]);
          }
          words.push_back(std::move(letters));
          line += ' ' + m->render(w);
        }
        if (inv.format == "json") {
          grades.push_back(
              {{"order", k}, {"count", elements.size()}, {"elements", words}});
        } else {
          std::cout << k << '\t' << elements.size() << '\t' << line.substr(line.empty() ? 0 : 1)
                    << '\n';
        }
      }
      if (inv.format == "json") {
        std::cout << json{{"grades", grades}}.dump() << '\n';
      }
    } else if (command == "verify") {
      auto ctx = mobius0::quotient_context_from_json(spec);
      mobius0::SuiteOptions options;
      options.truncation = n;
      auto reports = mobius0::run_identity_suite(m, ctx ? &*ctx : nullptr, options);
      bool ok      = true;
      json checks  = json::array();
      for (auto const& r : reports) {
        ok = ok && r.passed();
        if (inv.format == "json") {
          checks.push_back(mobius0::report_to_json(r));
        } else if (r.passed()) {
          std::cout << "PASS " << r.name << '\n';
        } else {
          std::cout << "FAIL " << r.name << ": " << *r.counterexample() << '\n';
        }
      }
      if (inv.format == "json") {
        std::cout << json{{"pass", ok}, {"checks", checks}}.dump() << '\n';
      }
      return ok ? 0 : 2;
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Möbius series and identities for locally finite monoids with zero"};
  app.require_subcommand(1);
  app.fallthrough();

  Invocation inv;
  app.add_option("--monoid", inv.monoid, "monoid description: JSON file or inline JSON")
      ->required();
  app.add_option("--order", inv.order, "truncation order N")->capture_default_str();
  app.add_option("--series", inv.series, "series JSON file or inline JSON (repeatable)");
  app.add_option("--format", inv.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--side", inv.side, "side of the Möbius factor (invert)")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();
  app.add_option("--terms", inv.terms, "number of grades (hilbert, count); defaults to --order");

  std::string command;
  for (auto const& [name, help] :
       std::vector<std::pair<char const*, char const*>>{
           {"mobius", "print the Möbius series of the monoid"},
           {"star", "print f* for a proper series f"},
           {"mul", "print the Cauchy product of two series"},
           {"invert", "print the Möbius inversion of a series"},
           {"hilbert", "print the leading Hilbert series coefficients"},
           {"count", "print the elements of each order"},
           {"verify", "run the identity suite"}}) {
    app.add_subcommand(name, help)->callback([&command, n = std::string(name)] {
      command = n;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 1;
  }

  try {
    return run(command, inv);
  } catch (mobius0::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (json::exception const& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << '\n';
  }
  return 1;
}
