// algradix command line front end.

#include "algradix/api.hpp"
#include "algradix/error.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using algradix::Json;
using algradix::api::Options;

constexpr const char* kVersion = "0.1.0";

int env_int(const char* name, int fallback) {
  if (const char* v = std::getenv(name)) {
    const int n = std::atoi(v);
    if (n > 0) return n;
  }
  return fallback;
}

struct Config {
  Options opts;
  std::string digits;
  std::string value;
  std::string format = "json";
  std::string output;
  std::string from_manifest;
  long height = 1;
  long h_max = 0;
  long length = 8;
  long a2_max = 8;
  bool trim = false;
  bool growth = false;
  std::string k_value;
  std::string k_range;
  std::string start = "+b";
  std::string word;
};

Json manifest(const std::vector<std::string>& args, const Config& c) {
  return {{"tool", "algradix"},
          {"version", kVersion},
          {"gmp", gmp_version},
          {"argv", args},
          {"limits",
           {{"precision_bits", c.opts.base_options.precision_bits},
            {"max_bits", c.opts.base_options.max_bits},
            {"max_steps", c.opts.max_steps},
            {"max_states", c.opts.max_states},
            {"max_candidates", c.opts.max_candidates}}}};
}

// Arguments that reproduce the run: the originals minus output plumbing,
// with the resolved precision made explicit.
std::vector<std::string> replay_args(const std::vector<std::string>& raw, const Config& c) {
  std::vector<std::string> out;
  bool has_precision = false;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::string& a = raw[i];
    if (a == "--output" || a == "-o" || a == "--from-manifest") {
      ++i;
      continue;
    }
    if (a.rfind("--output=", 0) == 0 || a.rfind("--from-manifest=", 0) == 0) continue;
    if (a == "--precision-bits" || a.rfind("--precision-bits=", 0) == 0) has_precision = true;
    out.push_back(a);
  }
  if (!has_precision && !out.empty() && out.front() != "sweep-quadratic" && out.front() != "rational") {
    out.push_back("--precision-bits");
    out.push_back(std::to_string(c.opts.base_options.precision_bits));
  }
  return out;
}

void add_base_options(CLI::App* sub, Config& c) {
  sub->add_option("--poly,-p", c.opts.poly, "minimal polynomial, e.g. \"x^2+2x+2\" or [2,2,1]");
  sub->add_option("--base,-b", c.opts.base, "rational or integer base a/b, used as b x - a");
  sub->add_option("--precision-bits", c.opts.base_options.precision_bits, "initial conjugate precision in bits")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-bits", c.opts.base_options.max_bits, "precision cap for root refinement")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--assume-irreducible", c.opts.base_options.assume_irreducible,
                "accept polynomials whose irreducibility cannot be decided");
}

void add_output_options(CLI::App* sub, Config& c, std::vector<std::string> formats) {
  sub->add_option("--format,-f", c.format, "output format")->check(CLI::IsMember(formats));
  sub->add_option("--output,-o", c.output, "write to a file instead of stdout");
}

std::string digits_msb(const Json& digits) {
  std::string out;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += it->is_string() ? it->get<std::string>() : it->dump();
  }
  return out;
}

void emit(const Config& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.output);
  if (!f) algradix::fail(algradix::ErrorKind::Precondition, "cannot write " + c.output);
  f << text;
}

int error_exit(algradix::ErrorKind kind, const std::string& message) {
  const Json err{{"error", {{"kind", algradix::to_string(kind)}, {"message", message}}}};
  std::cerr << err.dump() << '\n';
  return kind == algradix::ErrorKind::Resource ? 3 : 2;
}

int run(const std::vector<std::string>& raw);

std::vector<std::string> load_manifest_args(const std::string& path) {
  std::ifstream f(path);
  if (!f) algradix::fail(algradix::ErrorKind::Precondition, "cannot read manifest " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  std::string text = ss.str();
  // DOT and CSV outputs carry the manifest on a comment line.
  for (const std::string prefix : {"// manifest: ", "# manifest: "}) {
    if (text.rfind(prefix, 0) == 0) text = text.substr(prefix.size(), text.find('\n') - prefix.size());
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    algradix::fail(algradix::ErrorKind::Syntax, "manifest " + path + " is not JSON: " + e.what());
  }
  if (j.contains("manifest")) j = j["manifest"];
  if (!j.contains("argv") || !j["argv"].is_array()) {
    algradix::fail(algradix::ErrorKind::Syntax, "manifest " + path + " has no argv");
  }
  return j["argv"].get<std::vector<std::string>>();
}

int run(const std::vector<std::string>& raw) {
  Config c;
  c.opts.base_options.precision_bits = env_int("ALGRADIX_PRECISION_BITS", c.opts.base_options.precision_bits);
  c.opts.threads = env_int("ALGRADIX_THREADS", 1);

  CLI::App app{"Digit systems over algebraic bases"};
  app.name("algradix");
  app.set_version_flag("--version", kVersion);
  app.add_option("--from-manifest", c.from_manifest, "rerun the command recorded in a manifest or output file");
  app.add_option("--output,-o", c.output, "write to a file instead of stdout");
  app.require_subcommand(0, 1);

  auto* analyze = app.add_subcommand("analyze", "classify a base and bound its F-index");
  add_base_options(analyze, c);
  add_output_options(analyze, c, {"json"});

  auto* classify = app.add_subcommand("classify", "F-index report");
  add_base_options(classify, c);
  add_output_options(classify, c, {"json"});

  auto* expand = app.add_subcommand("expand", "digit expansion by the backward division map");
  add_base_options(expand, c);
  expand->add_option("--digits,-d", c.digits, "digit set, e.g. 0,1 or [[0,0],[1,0]]");
  expand->add_option("--value,-v", c.value, "element to expand: integer, a/b, or coordinate list")->required();
  expand->add_option("--max-steps", c.opts.max_steps, "orbit step limit")->check(CLI::PositiveNumber);
  add_output_options(expand, c, {"json", "text"});

  auto* periodic = app.add_subcommand("periodic", "periodic points of the backward division map");
  add_base_options(periodic, c);
  periodic->add_option("--digits,-d", c.digits, "digit set");
  periodic->add_option("--max-candidates", c.opts.max_candidates, "lattice enumeration cap")
      ->check(CLI::PositiveNumber);
  add_output_options(periodic, c, {"json"});

  auto* is_ns = app.add_subcommand("is-ns", "number system and spanning tests");
  add_base_options(is_ns, c);
  is_ns->add_option("--digits,-d", c.digits, "digit set");
  is_ns->add_option("--max-candidates", c.opts.max_candidates, "lattice enumeration cap")
      ->check(CLI::PositiveNumber);
  add_output_options(is_ns, c, {"json"});

  auto* rational = app.add_subcommand("rational", "rational base a/b");
  rational->add_option("--base,-b", c.opts.base, "base a/b")->required();
  rational->add_option("--digits,-d", c.digits, "digit set; defaults to the constructed set");
  add_output_options(rational, c, {"json", "text"});
  rational->require_subcommand(0, 1);
  rational->fallthrough();
  auto* r_expand = rational->add_subcommand("expand", "expansions of k b");
  r_expand->add_option("k", c.k_value, "multiplier k");
  r_expand->add_option("--k-range", c.k_range, "inclusive range lo:hi");
  r_expand->add_option("--max-steps", c.opts.max_steps, "orbit step limit")->check(CLI::PositiveNumber);
  auto* r_verify = rational->add_subcommand("verify", "check digit properties (A)-(D)");
  auto* r_transduce = rational->add_subcommand("transduce", "add or subtract b with the carry transducer");
  r_transduce->add_option("--start,-s", c.start, "initial carry: +b, -b or 0");
  r_transduce->add_option("--word,-w", c.word, "digits, least significant first")->required();

  auto* za = app.add_subcommand("zero-automaton", "automaton of zero representations");
  add_base_options(za, c);
  za->add_option("--height,-H", c.height, "digit bound H")->required()->check(CLI::PositiveNumber);
  za->add_flag("--trim", c.trim, "keep only co-accessible states");
  za->add_option("--export,--format", c.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  za->add_option("--output,-o", c.output, "write to a file instead of stdout");
  za->add_option("--max-states", c.opts.max_states, "state cap")->check(CLI::PositiveNumber);

  auto* mh = app.add_subcommand("min-height", "minimal height polynomial");
  add_base_options(mh, c);
  mh->add_option("--max-h", c.h_max, "largest H to try; defaults to the height of M")->check(CLI::PositiveNumber);
  mh->add_option("--max-states", c.opts.max_states, "state cap")->check(CLI::PositiveNumber);
  add_output_options(mh, c, {"json"});

  auto* cnt = app.add_subcommand("count", "count zero representations of a given length");
  add_base_options(cnt, c);
  cnt->add_option("--height,-H", c.height, "digit bound H")->required()->check(CLI::PositiveNumber);
  cnt->add_option("--length,-L", c.length, "word length")->check(CLI::NonNegativeNumber);
  cnt->add_flag("--growth", c.growth, "estimate the growth rate");
  cnt->add_option("--max-states", c.opts.max_states, "state cap")->check(CLI::PositiveNumber);
  add_output_options(cnt, c, {"json"});

  auto* sweep = app.add_subcommand("sweep-quadratic", "quadratic CNS criterion against brute force");
  sweep->add_option("--a2-max", c.a2_max, "largest constant term")->check(CLI::Range(2L, 1000L));
  c.format = "json";
  add_output_options(sweep, c, {"csv", "json"});

  std::vector<std::string> reversed(raw.rbegin(), raw.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return error_exit(algradix::ErrorKind::Syntax, e.what());
  }

  if (!c.from_manifest.empty()) {
    std::vector<std::string> args = load_manifest_args(c.from_manifest);
    if (!c.output.empty()) {
      args.push_back("--output");
      args.push_back(c.output);
    }
    return run(args);
  }
  if (app.get_subcommands().empty()) {
    std::cout << app.help();
    return 2;
  }
  if (sweep->parsed() && std::find(raw.begin(), raw.end(), "--format") == raw.end() &&
      std::find(raw.begin(), raw.end(), "-f") == raw.end()) {
    c.format = "csv";
  }

  const Json man = manifest(replay_args(raw, c), c);
  const auto wrap = [&](Json result) {
    const Json doc{{"manifest", man}, {"result", std::move(result)}};
    emit(c, doc.dump(2) + "\n");
  };

  if (analyze->parsed()) {
    wrap(algradix::api::analyze(c.opts));
  } else if (classify->parsed()) {
    wrap(algradix::api::classify(c.opts));
  } else if (expand->parsed()) {
    Json r = algradix::api::expand(c.opts, c.digits, c.value);
    if (c.format == "text") {
      emit(c, "(" + digits_msb(r["digits"]) + ")_" + (c.opts.poly.empty() ? c.opts.base : c.opts.poly) + " " +
                  r["tail"].get<std::string>() + "\n");
    } else {
      wrap(r);
    }
  } else if (periodic->parsed()) {
    wrap(algradix::api::periodic(c.opts, c.digits));
  } else if (is_ns->parsed()) {
    wrap(algradix::api::is_ns(c.opts, c.digits));
  } else if (rational->parsed()) {
    if (r_expand->parsed()) {
      long lo = 0;
      long hi = 0;
      if (!c.k_range.empty()) {
        const std::size_t colon = c.k_range.find(':');
        if (colon == std::string::npos) algradix::fail(algradix::ErrorKind::Syntax, "--k-range needs lo:hi");
        lo = algradix::parse_int(c.k_range.substr(0, colon)).get_si();
        hi = algradix::parse_int(c.k_range.substr(colon + 1)).get_si();
      } else if (!c.k_value.empty()) {
        lo = hi = algradix::parse_int(c.k_value).get_si();
      } else {
        algradix::fail(algradix::ErrorKind::Syntax, "rational expand needs k or --k-range");
      }
      Json r = algradix::api::rational_expand(c.opts.base, c.digits, lo, hi, c.opts.max_steps);
      if (c.format == "text") {
        std::string text;
        for (const auto& row : r["rows"]) {
          text += row["k"].get<std::string>() + "b = (" + digits_msb(row["digits"]) + ")_" + c.opts.base + " " +
                  row["tail"].get<std::string>() + "\n";
        }
        emit(c, text);
      } else {
        wrap(r);
      }
    } else if (r_verify->parsed()) {
      wrap(algradix::api::rational_verify(c.opts.base, c.digits));
    } else if (r_transduce->parsed()) {
      wrap(algradix::api::rational_transduce(c.opts.base, c.digits, c.start, c.word));
    } else {
      wrap(algradix::api::rational_digits(c.opts.base));
    }
  } else if (za->parsed()) {
    if (c.format == "dot") {
      emit(c, "// manifest: " + man.dump() + "\n" + algradix::api::zero_automaton_dot(c.opts, c.height, c.trim));
    } else {
      wrap(algradix::api::zero_automaton(c.opts, c.height, c.trim));
    }
  } else if (mh->parsed()) {
    wrap(algradix::api::min_height(c.opts, c.h_max));
  } else if (cnt->parsed()) {
    wrap(algradix::api::count(c.opts, c.height, static_cast<std::size_t>(c.length), c.growth));
  } else if (sweep->parsed()) {
    if (c.format == "csv") {
      emit(c, "# manifest: " + man.dump() + "\n" + algradix::api::sweep_quadratic_csv(c.a2_max, c.opts.threads));
    } else {
      wrap(algradix::api::sweep_quadratic(c.a2_max, c.opts.threads));
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run(args);
  } catch (const algradix::Error& e) {
    return error_exit(e.kind(), e.what());
  } catch (const std::exception& e) {
    return error_exit(algradix::ErrorKind::Precondition, e.what());
  }
}
