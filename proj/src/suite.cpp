#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "appell/identities.hpp"

namespace appell {

namespace {

using Job = std::function<std::vector<CheckReport>()>;
using Families = std::vector<std::pair<std::string, AppellFamily>>;

bool wants(const std::string& suite, const char* name) {
  return suite == "all" || suite == name;
}

std::vector<std::vector<CheckReport>> run_jobs(const std::vector<Job>& jobs,
                                               unsigned threads) {
  std::vector<std::vector<CheckReport>> slots(jobs.size());
  unsigned workers = std::min<std::size_t>(threads, jobs.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) slots[i] = jobs[i]();
    return slots;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      try {
        slots[i] = jobs[i]();
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return slots;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"all",   "reflection", "symmetric", "symmetric_deriv",
          "lemma_umbral", "remark_second_order", "corollary_alpha",
          "abel",  "xia",        "p3",        "p8",
          "gould"};
}

std::vector<std::string> default_families() {
  return {"bernoulli", "euler",    "monomial", "exponential",
          "random:1",  "random:2", "random:3"};
}

std::vector<CheckReport> run_suite(const SuiteConfig& config) {
  const auto known = suite_names();
  if (std::find(known.begin(), known.end(), config.suite) == known.end())
    throw std::invalid_argument("unknown suite: '" + config.suite + "'");

  std::vector<std::string> selectors =
      config.families.empty() ? default_families() : config.families;
  if (config.seed) {
    std::string extra = "random:" + std::to_string(*config.seed);
    if (std::find(selectors.begin(), selectors.end(), extra) == selectors.end())
      selectors.push_back(extra);
  }

  // constructed up front: an unknown selector must fail before any work runs
  auto fams = std::make_shared<Families>();
  for (const auto& s : selectors) fams->emplace_back(s, make_family(s));
  auto selected = [&](const char* name) {
    return std::any_of(fams->begin(), fams->end(),
                       [&](const auto& kv) { return kv.first == name; });
  };

  const unsigned N = config.max_n, M = config.max_m;
  const std::string& suite = config.suite;
  auto p_cap = [&](unsigned n, unsigned m) {
    unsigned cap = std::min(n, m);
    if (config.max_p && *config.max_p < cap) cap = *config.max_p;
    return cap;
  };

  std::vector<Job> jobs;
  auto one = [&jobs](std::function<CheckReport()> f) {
    jobs.push_back([f = std::move(f)] { return std::vector<CheckReport>{f()}; });
  };

  if (wants(suite, "reflection") && selected("bernoulli"))
    for (unsigned n = 0; n <= N; ++n)
      one([n] { return check_reflection(n); });

  if (wants(suite, "symmetric"))
    for (std::size_t i = 0; i < fams->size(); ++i)
      for (unsigned n = 0; n <= N; ++n)
        for (unsigned m = 0; m <= M; ++m)
          one([fams, i, n, m] { return check_symmetric((*fams)[i].second, n, m); });

  if (wants(suite, "symmetric_deriv"))
    for (std::size_t i = 0; i < fams->size(); ++i)
      for (unsigned n = 0; n <= N; ++n)
        for (unsigned m = 0; m <= M; ++m)
          for (unsigned p = 0; p <= p_cap(n, m); ++p)
            one([fams, i, n, m, p] {
              return check_symmetric_deriv((*fams)[i].second, n, m, p);
            });

  if (wants(suite, "lemma_umbral"))
    for (std::size_t i = 0; i < fams->size(); ++i)
      for (unsigned n = 0; n <= N; ++n)
        jobs.push_back([fams, i, n] { return check_lemma_umbral((*fams)[i].second, n); });

  if (wants(suite, "remark_second_order"))
    for (std::size_t i = 0; i < fams->size(); ++i)
      for (unsigned n = 0; n <= N; ++n)
        one([fams, i, n] { return check_remark_second_order((*fams)[i].second, n); });

  if (wants(suite, "corollary_alpha"))
    for (std::size_t i = 0; i < fams->size(); ++i)
      for (unsigned n = 0; n <= N; ++n)
        for (unsigned m = 0; m <= M; ++m)
          for (unsigned p = 0; p <= p_cap(n, m); ++p)
            one([fams, i, n, m, p] {
              return check_corollary_alpha((*fams)[i].second, n, m, p);
            });

  if (wants(suite, "abel"))
    for (std::size_t i = 0; i < fams->size(); ++i)
      for (unsigned n = 0; n <= N; ++n)
        jobs.push_back([fams, i, n] {
          const AppellFamily& f = (*fams)[i].second;
          return check_abel(f, f, n);
        });

  if (wants(suite, "xia"))
    for (unsigned row = 1; row <= 4; ++row) {
      std::string kind = (row <= 2) ? "euler" : "bernoulli";
      if (!selected(kind.c_str())) continue;
      for (unsigned n = (row % 2 == 0) ? 1 : 0; n <= N; ++n)
        jobs.push_back([kind, row, n] { return check_xia(kind, row, n); });
    }

  auto push_lifts = [&](const IdentitySchema& s, std::size_t i, bool same_order) {
    for (unsigned n = 0; n <= N; ++n) {
      if (!s.admits(n)) continue;
      jobs.push_back([s, fams, i, n, same_order] {
        return same_order ? lift_p_first(s, (*fams)[i].second, n)
                          : lift_p3_first(s, (*fams)[i].second, n);
      });
      jobs.push_back([s, fams, i, n, same_order] {
        return same_order ? lift_p_second(s, (*fams)[i].second, n)
                          : lift_p3_second(s, (*fams)[i].second, n);
      });
    }
  };
  auto index_of = [&](const char* name) {
    for (std::size_t i = 0; i < fams->size(); ++i)
      if ((*fams)[i].first == name) return i;
    return fams->size();
  };

  if (wants(suite, "p3")) {
    IdentitySchema zero = schema_zero(N);
    for (std::size_t i = 0; i < fams->size(); ++i) push_lifts(zero, i, false);
    if (std::size_t i = index_of("monomial"); i < fams->size())
      push_lifts(schema_trivial(N), i, false);
    for (std::size_t i = 0; i < fams->size(); ++i)
      push_lifts(schema_abel_q0((*fams)[i].second, N), i, false);
    for (unsigned row = 1; row <= 4; ++row) {
      std::size_t i = index_of(row <= 2 ? "euler" : "bernoulli");
      if (i < fams->size()) push_lifts(schema_xia(row, N), i, false);
    }
    if (std::size_t i = index_of("bernoulli"); i < fams->size())
      for (unsigned m = 0; m <= M; ++m) push_lifts(schema_gould(m, N), i, false);
  }

  if (wants(suite, "p8")) {
    for (auto factory : {schema_ljunggren, schema_munarini, schema_simons}) {
      IdentitySchema s = factory(N);
      for (std::size_t i = 0; i < fams->size(); ++i) push_lifts(s, i, true);
    }
  }

  if (wants(suite, "gould") && selected("bernoulli"))
    for (unsigned n = 0; n <= N; ++n)
      for (unsigned m = 0; m <= M; ++m)
        jobs.push_back([n, m] { return check_gould("bernoulli", n, m); });

  auto slots = run_jobs(jobs, config.threads == 0 ? 1 : config.threads);
  std::vector<CheckReport> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));

  if (config.inject_failure) {
    CheckReport r;
    r.identity = "injected_failure";
    r.family = "-";
    r.pass = false;
    r.lhs = "0";
    r.rhs = "1";
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace appell
