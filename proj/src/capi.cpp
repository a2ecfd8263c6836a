// Copyright 2026 The signposet Authors
// SPDX-License-Identifier: Apache-2.0

#include "signposet/signposet.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "json.hpp"

#include "signposet/enumeration.hpp"
#include "signposet/poset.hpp"
#include "signposet/report.hpp"
#include "signposet/shelling.hpp"
#include "signposet/sperner.hpp"

struct sp_poset {
  signposet::GradedPoset poset;
};

namespace {

using namespace signposet;

constexpr int kMaxLatticeLength = 8;

thread_local std::string last_error;

sp_status fail(sp_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
sp_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const guard_error& e) {
    return fail(SP_GUARD, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SP_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(SP_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SP_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SP_INTERNAL, e.what());
  } catch (...) {
    return fail(SP_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sp_status emit(char** out, const std::string& s, bool passed) {
  if (!out) throw std::invalid_argument("output pointer is null");
  *out = dup(s);
  return passed ? SP_OK : SP_VIOLATION;
}

RunOptions options_of(const sp_options* opts) {
  RunOptions o;
  if (opts) {
    o.force = opts->force != 0;
    o.jobs = opts->jobs < 1 ? 1 : opts->jobs;
  }
  return o;
}

Family family_of(sp_family f) {
  switch (f) {
    case SP_FAMILY_R: return Family::R;
    case SP_FAMILY_P: return Family::P;
  }
  throw std::invalid_argument("unknown family");
}

std::string title(const char* what, Family family, int n, int l) {
  return std::string(what) + " " + family_name(family) + "_{" + std::to_string(n) + "," +
         std::to_string(l) + "}";
}

std::string el_text(const ELReport& r) {
  std::ostringstream out;
  out << title("EL labeling of", Family::R_hat, r.n, r.l) << ": " << (r.passed() ? "PASS" : "FAIL")
      << "\n  intervals " << r.intervals_checked << ", maximal chains scanned " << r.chains_scanned
      << "\n  by case: interior " << r.case_counts[0] << ", from bottom " << r.case_counts[1]
      << ", to top " << r.case_counts[2] << ", whole " << r.case_counts[3] << '\n';
  for (const auto& v : r.violations) out << "  violation [" << v.x << ", " << v.y << "]: " << v.reason << '\n';
  return out.str();
}

std::string flow_text(const FlowReport& r, Family family, int n, int l) {
  std::ostringstream out;
  out << title("normalized flow on", family, n, l) << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& s : r.ranks) {
    out << "  rank " << s.rank << ": up " << (s.up ? fraction_string(*s.up) : "-") << ", down "
        << (s.down ? fraction_string(*s.down) : "-") << '\n';
  }
  for (const auto& v : r.violations) {
    out << "  " << v.condition << " at rank " << v.rank;
    if (!v.first.empty()) out << " (" << v.first << (v.second.empty() ? "" : ", " + v.second) << ")";
    out << ": " << v.detail << '\n';
  }
  return out.str();
}

RationalFlow flow_for(const GradedPoset& p) {
  return p.family() == Family::R ? flow_R(p) : flow_P(p);
}

void require_report_format(sp_format format) {
  if (format != SP_FORMAT_JSON && format != SP_FORMAT_TEXT) {
    throw std::invalid_argument("reports are available as json or text");
  }
}

}  // namespace

extern "C" {

const char* sp_version(void) { return "0.1.0"; }

const char* sp_last_error(void) { return last_error.c_str(); }

void sp_string_free(char* s) { std::free(s); }

sp_status sp_poset_build(int n, int l, sp_family family, sp_poset** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("output pointer is null");
    *out = new sp_poset{build_poset(n, l, family_of(family))};
    return SP_OK;
  });
}

sp_status sp_poset_bounded(const sp_poset* p, sp_poset** out) {
  return guarded([&] {
    if (!p || !out) throw std::invalid_argument("null handle");
    *out = new sp_poset{bounded_extension(p->poset)};
    return SP_OK;
  });
}

void sp_poset_free(sp_poset* p) { delete p; }

sp_status sp_poset_size(const sp_poset* p, size_t* elements, size_t* cover_edges) {
  return guarded([&] {
    if (!p) throw std::invalid_argument("null handle");
    if (elements) *elements = p->poset.size();
    if (cover_edges) *cover_edges = p->poset.edge_count();
    return SP_OK;
  });
}

sp_status sp_poset_export(const sp_poset* p, sp_format format, char** out) {
  return guarded([&] {
    if (!p) throw std::invalid_argument("null handle");
    if (format == SP_FORMAT_JSON) return emit(out, to_json(p->poset), true);
    if (format == SP_FORMAT_DOT) return emit(out, to_dot(p->poset), true);
    throw std::invalid_argument("posets export as json or dot");
  });
}

sp_status sp_verify_el(int n, int l, const sp_options* opts, sp_format format, char** report) {
  return guarded([&] {
    require_report_format(format);
    const ELReport r = verify_el(n, l, options_of(opts));
    return emit(report, format == SP_FORMAT_JSON ? to_json(r) : el_text(r), r.passed());
  });
}

sp_status sp_verify_flow(int n, int l, sp_family family, sp_format format, char** report) {
  return guarded([&] {
    require_report_format(format);
    const Family f = family_of(family);
    const GradedPoset p = build_poset(n, l, f);
    const FlowReport r = verify_flow(flow_for(p));
    return emit(report, format == SP_FORMAT_JSON ? to_json(r) : flow_text(r, f, n, l), r.passed());
  });
}

sp_status sp_flow_export(int n, int l, sp_family family, char** out) {
  return guarded([&] {
    const GradedPoset p = build_poset(n, l, family_of(family));
    return emit(out, flow_to_json(flow_for(p)), true);
  });
}

sp_status sp_verify_lattice(int n, int l, sp_family family, const sp_options* opts,
                            sp_format format, char** report) {
  return guarded([&] {
    require_report_format(format);
    if (n > kMaxLatticeLength && !options_of(opts).force) {
      throw guard_error("lattice checks are limited to n <= " + std::to_string(kMaxLatticeLength));
    }
    const Family f = family_of(family);
    const GradedPoset hat = bounded_extension(build_poset(n, l, f));
    const LatticeReport r = lattice_report(hat);
    if (format == SP_FORMAT_JSON) return emit(report, to_json(r, hat), r.is_lattice);
    std::ostringstream out;
    out << title("bounded", f, n, l) << ": lattice " << (r.is_lattice ? "yes" : "no")
        << ", distributive " << (r.is_distributive ? "yes" : "no") << '\n';
    if (r.non_lattice_pair) {
      out << "  " << hat.label(r.non_lattice_pair->first) << ", " << hat.label(r.non_lattice_pair->second)
          << ": " << r.non_lattice_reason << '\n';
    }
    return emit(report, out.str(), r.is_lattice);
  });
}

sp_status sp_verify_atoms(int n, int l, const sp_options* opts, sp_format format, char** report) {
  return guarded([&] {
    require_report_format(format);
    const bool lex = atom_order_is_lex(n, l, options_of(opts));
    if (format == SP_FORMAT_JSON) {
      nlohmann::ordered_json doc{{"n", n}, {"l", l}, {"label_order_is_lex", lex}};
      return emit(report, doc.dump(2) + "\n", lex);
    }
    return emit(report,
                title("cover order of", Family::R_hat, n, l) + ": label order " +
                    (lex ? "equals" : "DIFFERS FROM") + " lexicographic order\n",
                lex);
  });
}

sp_status sp_vectors(int n, int l, const char* kind, sp_family family, sp_format format,
                     const sp_options* opts, char** out) {
  return guarded([&] {
    if (!kind) throw std::invalid_argument("vector kind is null");
    const VectorTable t = vector_table(n, l, parse_vector_kind(kind), family_of(family), options_of(opts));
    const bool ok = !t.enumerated || t.all_equal();
    switch (format) {
      case SP_FORMAT_JSON: return emit(out, to_json(t), ok);
      case SP_FORMAT_CSV: return emit(out, to_csv(t), ok);
      case SP_FORMAT_TEXT: return emit(out, to_text(t), ok);
      default: throw std::invalid_argument("vector tables are available as json, csv or text");
    }
  });
}

sp_status sp_sweep(int n_max, sp_format format, const sp_options* opts, char** out) {
  return guarded([&] {
    const SweepTable t = sperner_sweep(n_max, options_of(opts));
    if (format == SP_FORMAT_CSV || format == SP_FORMAT_TEXT) return emit(out, to_csv(t), t.all_pass());
    if (format != SP_FORMAT_JSON) throw std::invalid_argument("sweep tables are available as csv, json or text");
    nlohmann::ordered_json doc;
    doc["n_max"] = n_max;
    doc["all_sperner"] = t.all_pass();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
      rows.push_back({{"n", r.n},
                      {"l", r.l},
                      {"size", r.size},
                      {"max_antichain", r.max_antichain},
                      {"max_W", r.max_whitney},
                      {"sperner", r.sperner}});
    }
    doc["rows"] = std::move(rows);
    return emit(out, doc.dump(2) + "\n", t.all_pass());
  });
}

sp_status sp_chains(int n, int l, sp_format format, const sp_options* opts, char** out) {
  return guarded([&] {
    require_report_format(format);
    const RunOptions o = options_of(opts);
    return emit(out, format == SP_FORMAT_JSON ? chains_json(n, l, o) : chains_text(n, l, o), true);
  });
}

}  // extern "C"
