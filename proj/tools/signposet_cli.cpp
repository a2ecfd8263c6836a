// Copyright 2026 The signposet Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the engine only through signposet.h.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "signposet/signposet.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Config {
  std::vector<std::string> positional;
  std::optional<int> n;
  std::optional<int> l;
  std::string family;
  std::string format;
  std::string out;
  int jobs = 1;
  bool force = false;
  bool edges = false;
  bool bounded = false;
};

[[noreturn]] void usage_error(const std::string& message) {
  std::cerr << "signposet: " << message << '\n';
  std::exit(kExitUsage);
}

bool is_int(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

bool is_family(const std::string& s) { return s == "R" || s == "P" || s == "r" || s == "p"; }

bool is_format(const std::string& s) { return s == "json" || s == "csv" || s == "dot" || s == "text"; }

// Positional integers fill n then l; a family letter or format name may follow.
void absorb_positionals(Config& c, std::vector<std::string> extra_kinds, std::string* kind) {
  int pn = -1, pl = -1;
  int ints = 0;
  for (const auto& tok : c.positional) {
    if (is_int(tok)) {
      if (ints == 0) pn = std::stoi(tok);
      else if (ints == 1) pl = std::stoi(tok);
      else usage_error("too many integer arguments");
      ++ints;
    } else if (is_family(tok) && c.family.empty()) {
      c.family = tok;
    } else if (is_format(tok) && c.format.empty()) {
      c.format = tok;
    } else if (kind && kind->empty() &&
               std::find(extra_kinds.begin(), extra_kinds.end(), tok) != extra_kinds.end()) {
      *kind = tok;
    } else {
      usage_error("unexpected argument '" + tok + "'");
    }
  }
  if (pn >= 0) {
    if (c.n && *c.n != pn) usage_error("n given twice with different values");
    c.n = pn;
  }
  if (pl >= 0) {
    if (c.l && *c.l != pl) usage_error("l given twice with different values");
    c.l = pl;
  }
}

sp_family family_of(const Config& c) {
  if (c.family.empty() || c.family == "R" || c.family == "r") return SP_FAMILY_R;
  if (c.family == "P" || c.family == "p") return SP_FAMILY_P;
  usage_error("family must be R or P");
}

sp_format format_of(const std::string& f) {
  if (f == "json") return SP_FORMAT_JSON;
  if (f == "csv") return SP_FORMAT_CSV;
  if (f == "dot") return SP_FORMAT_DOT;
  if (f == "text") return SP_FORMAT_TEXT;
  usage_error("unknown format '" + f + "'");
}

int require(const std::optional<int>& v, const char* name) {
  if (!v) usage_error(std::string("missing ") + name);
  return *v;
}

sp_options options_of(const Config& c) {
  sp_options o{};
  o.force = c.force ? 1 : 0;
  o.jobs = c.jobs;
  return o;
}

int finish(sp_status status, char* text, const Config& c) {
  if (text) {
    if (c.out.empty()) {
      std::fputs(text, stdout);
    } else {
      std::ofstream file(c.out, std::ios::binary);
      file << text;
      if (!file) {
        sp_string_free(text);
        std::cerr << "signposet: cannot write " << c.out << '\n';
        return kExitUsage;
      }
    }
    sp_string_free(text);
  }
  switch (status) {
    case SP_OK: return kExitPass;
    case SP_VIOLATION: return kExitViolation;
    case SP_INVALID_ARGUMENT:
    case SP_GUARD:
      std::cerr << "signposet: " << sp_last_error() << '\n';
      if (status == SP_GUARD) std::cerr << "signposet: pass --force (or set SIGNPOSET_FORCE=1) to override\n";
      return kExitUsage;
    default:
      std::cerr << "signposet: internal error: " << sp_last_error() << '\n';
      return kExitInternal;
  }
}

void add_common(CLI::App* sub, Config& c, bool with_l = true) {
  sub->add_option("args", c.positional, "positional form, e.g. '3 1 R json'");
  sub->add_option("--n", c.n, "length of the sign vectors")->check(CLI::NonNegativeNumber);
  if (with_l) sub->add_option("--l", c.l, "number of sign changes")->check(CLI::NonNegativeNumber);
  sub->add_option("--format", c.format, "json, csv, dot or text");
  sub->add_option("--out", c.out, "write output to a file instead of stdout");
  sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  sub->add_flag("--force", c.force, "lift exhaustive-scale guards");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sign-vector posets R_{n,l} and P_{n,l}: construction, shelling, flag vectors, flows, Sperner checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sp_version()));

  Config c;
  std::string kind;

  auto* build = app.add_subcommand("build", "construct a poset and export it (json or dot)");
  add_common(build, c);
  build->add_option("--family", c.family, "R or P");
  build->add_flag("--bounded", c.bounded, "adjoin bottom and top elements");

  auto* verify = app.add_subcommand("verify", "run a verification suite: el, flow, lattice or atoms");
  verify->add_option("kind", kind, "el, flow, lattice or atoms")->required()
      ->check(CLI::IsMember({"el", "flow", "lattice", "atoms"}));
  add_common(verify, c);
  verify->add_option("--family", c.family, "R or P (flow and lattice)");
  verify->add_flag("--edges", c.edges, "flow: print the weighted edge list instead of the report");

  auto* vectors = app.add_subcommand("vectors", "f, h, flag f, flag h or Whitney table with both columns");
  add_common(vectors, c);
  vectors->add_option("--which", kind, "f, h, flagf, flagh or whitney");
  vectors->add_option("--family", c.family, "R or P (whitney only)");

  auto* sweep = app.add_subcommand("sweep", "Sperner sweep over P_{n,l} for all l < n <= n_max");
  add_common(sweep, c, false);

  auto* chains = app.add_subcommand("chains", "dump maximal chains of the bounded R_{n,l} with labels");
  add_common(chains, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (const char* env = std::getenv("SIGNPOSET_FORCE"); env && *env && std::string(env) != "0") {
    c.force = true;
  }
  if (c.force) std::cerr << "signposet: warning: size guards disabled; this run may take very long\n";

  const sp_options opts = options_of(c);
  char* text = nullptr;

  if (build->parsed()) {
    absorb_positionals(c, {}, nullptr);
    const int n = require(c.n, "n");
    const int l = require(c.l, "l");
    const sp_format fmt = format_of(c.format.empty() ? "json" : c.format);
    sp_poset* p = nullptr;
    sp_status s = sp_poset_build(n, l, family_of(c), &p);
    if (s != SP_OK) return finish(s, nullptr, c);
    if (c.bounded) {
      sp_poset* hat = nullptr;
      s = sp_poset_bounded(p, &hat);
      sp_poset_free(p);
      if (s != SP_OK) return finish(s, nullptr, c);
      p = hat;
    }
    s = sp_poset_export(p, fmt, &text);
    sp_poset_free(p);
    return finish(s, text, c);
  }

  if (verify->parsed()) {
    absorb_positionals(c, {}, nullptr);
    const int n = require(c.n, "n");
    const int l = require(c.l, "l");
    const sp_format fmt = format_of(c.format.empty() ? "text" : c.format);
    sp_status s = SP_INTERNAL;
    if (kind == "el") s = sp_verify_el(n, l, &opts, fmt, &text);
    else if (kind == "flow" && c.edges) s = sp_flow_export(n, l, family_of(c), &text);
    else if (kind == "flow") s = sp_verify_flow(n, l, family_of(c), fmt, &text);
    else if (kind == "lattice") s = sp_verify_lattice(n, l, family_of(c), &opts, fmt, &text);
    else s = sp_verify_atoms(n, l, &opts, fmt, &text);
    return finish(s, text, c);
  }

  if (vectors->parsed()) {
    absorb_positionals(c, {"f", "h", "flagf", "flagh", "whitney"}, &kind);
    const int n = require(c.n, "n");
    const int l = require(c.l, "l");
    if (kind.empty()) usage_error("missing vector kind (f, h, flagf, flagh, whitney)");
    const sp_format fmt = format_of(c.format.empty() ? "text" : c.format);
    const sp_status s = sp_vectors(n, l, kind.c_str(), family_of(c), fmt, &opts, &text);
    return finish(s, text, c);
  }

  if (sweep->parsed()) {
    absorb_positionals(c, {}, nullptr);
    if (c.l) usage_error("sweep takes a single bound n_max");
    const int n_max = require(c.n, "n_max");
    const sp_format fmt = format_of(c.format.empty() ? "csv" : c.format);
    const sp_status s = sp_sweep(n_max, fmt, &opts, &text);
    return finish(s, text, c);
  }

  absorb_positionals(c, {}, nullptr);
  const int n = require(c.n, "n");
  const int l = require(c.l, "l");
  const sp_format fmt = format_of(c.format.empty() ? "text" : c.format);
  const sp_status s = sp_chains(n, l, fmt, &opts, &text);
  return finish(s, text, c);
}
