/* Copyright (C) 2026 gaussval developers
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include "gaussval/gaussval.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "gaussval/error.hpp"
#include "gaussval/fa_family.hpp"
#include "gaussval/legendre.hpp"
#include "gaussval/plot.hpp"
#include "gaussval/polygon.hpp"
#include "gaussval/profile.hpp"
#include "gaussval/serialize.hpp"
#include "gaussval/strata.hpp"
#include "gaussval/verify.hpp"

struct gv_profile {
  gaussval::CoefficientProfile value;
};
struct gv_polygon {
  gaussval::ConvexProfile value;
};
struct gv_transform {
  gaussval::ConcaveTransform value;
};
struct gv_fa_report {
  gaussval::FaBuildReport value;
};

namespace {

using namespace gaussval;

thread_local std::string last_error;

gv_status set_error(gv_status status, const std::string& what) {
  last_error = what;
  return status;
}

template <class F>
gv_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return GV_OK;
  } catch (const Error& e) {
    return set_error(static_cast<gv_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(GV_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(GV_INTERNAL, e.what());
  }
}

void need(const void* p, const char* name) {
  if (p == nullptr) fail(ErrorCode::InvalidArgument, std::string(name) + " must not be NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Rational arg(const char* text, const char* name) {
  need(text, name);
  return parse_rational(text);
}

gv_verdict verdict_code(VerdictKind k) {
  switch (k) {
    case VerdictKind::DivergenceWitnessed: return GV_VERDICT_DIVERGENCE_WITNESSED;
    case VerdictKind::BoundedUpTo: return GV_VERDICT_BOUNDED_UP_TO;
    case VerdictKind::Boundary: return GV_VERDICT_BOUNDARY;
    case VerdictKind::Inconclusive: return GV_VERDICT_INCONCLUSIVE;
  }
  return GV_VERDICT_INCONCLUSIVE;
}

Json check_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["failed"] = c.failed;
  j["failures"] = c.failures;
  return j;
}

}  // namespace

extern "C" {

const char* gv_version(void) { return "0.1.0"; }

const char* gv_last_error(void) { return last_error.c_str(); }

const char* gv_status_name(gv_status status) {
  switch (status) {
    case GV_OK: return "ok";
    case GV_INVALID_ARGUMENT: return "invalid argument";
    case GV_PARSE: return "parse error";
    case GV_ZERO_ELEMENT: return "zero element";
    case GV_UNKNOWN_REGION: return "unknown region";
    case GV_TRUNCATION: return "truncation";
    case GV_PRECISION: return "precision";
    case GV_INCONCLUSIVE: return "inconclusive";
    case GV_IO: return "io";
    case GV_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void gv_string_free(char* s) { std::free(s); }

gv_status gv_profile_from_json(const char* json, gv_profile** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new gv_profile{profile_from_json(parse_json(json))};
  });
}

gv_status gv_profile_to_json(const gv_profile* f, char** out) {
  return guarded([&] {
    need(f, "profile");
    need(out, "out");
    *out = dup(dump_json(to_json(f->value)));
  });
}

void gv_profile_free(gv_profile* f) { delete f; }

gv_status gv_gauss_valuation(const gv_profile* f, const char* s, char** value, int* exact) {
  return guarded([&] {
    need(f, "profile");
    need(value, "value");
    need(exact, "exact");
    const ValueWithCertificate v = gauss_valuation(f->value, arg(s, "s"));
    *value = dup(v.value.str());
    *exact = v.exact ? 1 : 0;
  });
}

gv_status gv_frobenius_pullback(const gv_profile* f, long p, gv_profile** out) {
  return guarded([&] {
    need(f, "profile");
    need(out, "out");
    *out = new gv_profile{frobenius_pullback(f->value, p)};
  });
}

gv_status gv_newton_polygon(const gv_profile* f, gv_polygon** out) {
  return guarded([&] {
    need(f, "profile");
    need(out, "out");
    *out = new gv_polygon{newton_polygon(f->value)};
  });
}

gv_status gv_polygon_from_json(const char* json, gv_polygon** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new gv_polygon{polygon_from_json(parse_json(json))};
  });
}

gv_status gv_polygon_to_json(const gv_polygon* p, char** out) {
  return guarded([&] {
    need(p, "polygon");
    need(out, "out");
    *out = dup(dump_json(to_json(p->value)));
  });
}

void gv_polygon_free(gv_polygon* p) { delete p; }

int gv_polygon_equal(const gv_polygon* p, const gv_polygon* q) {
  if (p == nullptr || q == nullptr) return p == q;
  return p->value == q->value ? 1 : 0;
}

gv_status gv_polygon_csv(const gv_polygon* p, char** out) {
  return guarded([&] {
    need(p, "polygon");
    need(out, "out");
    *out = dup(polygon_csv(p->value));
  });
}

gv_status gv_legendre_eval(const gv_polygon* p, const char* t, char** value, int* exact) {
  return guarded([&] {
    need(p, "polygon");
    need(value, "value");
    need(exact, "exact");
    const ValueWithCertificate v = legendre_eval(p->value, arg(t, "t"));
    *value = dup(v.value.str());
    *exact = v.exact ? 1 : 0;
  });
}

gv_status gv_legendre_full(const gv_polygon* p, gv_transform** out) {
  return guarded([&] {
    need(p, "polygon");
    need(out, "out");
    *out = new gv_transform{legendre_full(p->value)};
  });
}

gv_status gv_inverse_legendre(const gv_transform* t, gv_polygon** out) {
  return guarded([&] {
    need(t, "transform");
    need(out, "out");
    *out = new gv_polygon{inverse_legendre(t->value)};
  });
}

gv_status gv_transform_from_json(const char* json, gv_transform** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new gv_transform{transform_from_json(parse_json(json))};
  });
}

gv_status gv_transform_to_json(const gv_transform* t, char** out) {
  return guarded([&] {
    need(t, "transform");
    need(out, "out");
    *out = dup(dump_json(to_json(t->value)));
  });
}

gv_status gv_transform_eval(const gv_transform* t, const char* at, char** value) {
  return guarded([&] {
    need(t, "transform");
    need(value, "value");
    *value = dup(to_string(t->value(arg(at, "t"))));
  });
}

void gv_transform_free(gv_transform* t) { delete t; }

gv_status gv_build_fa(const char* a, long n, unsigned long precision, gv_fa_report** out) {
  return guarded([&] {
    need(out, "out");
    *out = new gv_fa_report{build_fa(FaSpec{arg(a, "a"), n, precision})};
  });
}

gv_status gv_fa_report_from_json(const char* json, gv_fa_report** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new gv_fa_report{fa_report_from_json(parse_json(json))};
  });
}

gv_status gv_fa_report_to_json(const gv_fa_report* r, char** out) {
  return guarded([&] {
    need(r, "report");
    need(out, "out");
    *out = dup(dump_json(to_json(r->value)));
  });
}

gv_status gv_fa_report_info(const gv_fa_report* r, long* n, unsigned long* precision, long* certified_horizon) {
  return guarded([&] {
    need(r, "report");
    if (n) *n = r->value.n;
    if (precision) *precision = r->value.precision;
    if (certified_horizon) *certified_horizon = r->value.certified_horizon;
  });
}

gv_status gv_fa_report_polygon(const gv_fa_report* r, gv_polygon** out) {
  return guarded([&] {
    need(r, "report");
    need(out, "out");
    *out = new gv_polygon{r->value.polygon};
  });
}

void gv_fa_report_free(gv_fa_report* r) { delete r; }

gv_status gv_classify(const gv_polygon* p, const char* lambda, const char* mu, const char* a, size_t horizon,
                      char** report_json, gv_verdict* verdict) {
  return guarded([&] {
    need(p, "polygon");
    need(report_json, "report_json");
    need(verdict, "verdict");
    const StratumIndex l(arg(lambda, "lambda"));
    std::optional<StratumIndex> m;
    if (mu) m.emplace(arg(mu, "mu"));
    Json report;
    if (a) {
      const Rational av = arg(a, "a");
      const ThresholdVerdict vl = prop4_verdict(av, p->value, l.value(), horizon);
      *verdict = verdict_code(vl.analytic.kind);
      report["lambda"] = to_json(vl);
      if (m) {
        if (!(l.value() < m->value())) fail(ErrorCode::InvalidArgument, "--mu must exceed --lambda");
        report["mu"] = to_json(prop4_verdict(av, p->value, m->value(), horizon));
      }
    } else if (m) {
      const ChainReport c = stratum_chain_witness(p->value, l, *m, horizon);
      *verdict = verdict_code(c.lower.verdict.kind);
      report = to_json(c);
    } else {
      const StratumReport r = classify(p->value, l, horizon);
      *verdict = verdict_code(r.verdict.kind);
      report = to_json(r);
    }
    *report_json = dup(dump_json(report));
  });
}

gv_status gv_verify(const char* suite, uint64_t seed, const gv_fa_report* fa_report, char** summary,
                    char** report_json, int* all_passed) {
  return guarded([&] {
    need(suite, "suite");
    need(summary, "summary");
    need(report_json, "report_json");
    need(all_passed, "all_passed");
    std::optional<FaBuildReport> rep;
    if (fa_report) rep = fa_report->value;
    const auto results = run_suites(suite, seed, rep);
    std::string text;
    Json suites = Json::array();
    bool ok = true;
    std::size_t passed = 0, failed = 0;
    for (const auto& s : results) {
      ok = ok && s.ok();
      passed += s.passed();
      failed += s.failed();
      text += s.suite + ": " + std::to_string(s.passed()) + " passed, " + std::to_string(s.failed()) + " failed\n";
      Json checks = Json::array();
      for (const auto& c : s.checks) {
        checks.push_back(check_json(c));
        if (!c.ok())
          for (const auto& f : c.failures) text += "  FAIL " + c.name + ": " + f + "\n";
      }
      suites.push_back(Json{{"suite", s.suite}, {"passed", s.passed()}, {"failed", s.failed()}, {"checks", checks}});
    }
    text += std::string("total: ") + std::to_string(passed) + " passed, " + std::to_string(failed) + " failed\n";
    Json report;
    report["seed"] = seed;
    report["suites"] = std::move(suites);
    report["passed"] = passed;
    report["failed"] = failed;
    report["ok"] = ok;
    *summary = dup(text);
    *report_json = dup(dump_json(report));
    *all_passed = ok ? 1 : 0;
  });
}

gv_status gv_plot(const gv_polygon* p, const char* format, char** out) {
  return guarded([&] {
    need(p, "polygon");
    need(out, "out");
    const std::string f = format ? format : "svg";
    if (f == "svg") *out = dup(plot_svg(p->value));
    else if (f == "csv") *out = dup(plot_csv(p->value));
    else fail(ErrorCode::InvalidArgument, "plot format must be svg or csv");
  });
}

}  // extern "C"
