#pragma once

// Command-level entry points returning JSON results; shared by the CLI and the Python module.

#include "algradix/serialize.hpp"

#include <cstddef>
#include <string>

namespace algradix::api {

struct Options {
  std::string poly;  // polynomial text
  std::string base;  // "a/b" or integer; alternative to poly
  BaseOptions base_options;
  std::size_t max_steps = kDefaultMaxSteps;
  std::size_t max_states = 1'000'000;
  std::size_t max_candidates = 10'000'000;
  int threads = 1;
};

Json analyze(const Options& o);
Json classify(const Options& o);
/// Empty digits select {0, ..., |M(0)| - 1}.
Json expand(const Options& o, const std::string& digits, const std::string& value);
Json periodic(const Options& o, const std::string& digits);
Json is_ns(const Options& o, const std::string& digits);

/// Empty digits select the constructed set for a/b.
Json rational_digits(const std::string& base);
Json rational_verify(const std::string& base, const std::string& digits);
Json rational_expand(const std::string& base, const std::string& digits, long k_lo, long k_hi, std::size_t max_steps);
/// start is "+b", "-b", "0" or an integer equal to one of b, -b, 0; the word is least significant first.
Json rational_transduce(const std::string& base, const std::string& digits, const std::string& start,
                        const std::string& word);

Json zero_automaton(const Options& o, long h, bool trimmed);
std::string zero_automaton_dot(const Options& o, long h, bool trimmed);
Json min_height(const Options& o, long h_max);
Json count(const Options& o, long h, std::size_t length, bool growth);
Json sweep_quadratic(long a2_max, int threads);
std::string sweep_quadratic_csv(long a2_max, int threads);

}  // namespace algradix::api
