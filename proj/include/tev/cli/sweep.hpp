#pragma once

// Parameter-grid sweeps over (g, d, e, r) with deterministic CSV / JSON
// Lines output. Tuples are evaluated concurrently but always emitted in
// (e, r, g, d) order.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "tev/closed_forms.hpp"
#include "tev/enumerativity.hpp"
#include "tev/errors.hpp"
#include "tev/jacobian.hpp"
#include "tev/params.hpp"

namespace tev::cli {

struct Tuple {
  int g = 0, d = 0, e = 0, r = 0;
  friend bool operator==(const Tuple&, const Tuple&) = default;
};

struct SweepRecord {
  int g = 0, d = 0, e = 0, r = 0, n = 0;
  std::int64_t t = 0;
  std::string value_closed;
  std::string value_engine;
  bool agreement = false;
  bool virtual_range = false;
  bool bound_ok = false;
  bool certified = false;
};

inline constexpr const char* kCsvHeader =
    "g,d,e,r,n,t,value_closed,value_engine,agreement,virtual_range,bound_ok,certified";

/// Parses "5", "0..3" (inclusive) or "3,4,7" into a sorted, deduplicated list.
inline std::vector<int> parse_int_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse integer range '" + text + "'");
    }
    if (pos != s.size()) throw InvalidInput("cannot parse integer range '" + text + "'");
    return v;
  };
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = to_int(text.substr(0, dots));
    const int hi = to_int(text.substr(dots + 2));
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_int(item));
  }
  if (out.empty()) throw InvalidInput("empty integer range '" + text + "'");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Cartesian product in (e, r, g, d) order.
inline std::vector<Tuple> grid(const std::vector<int>& gs, const std::vector<int>& ds, const std::vector<int>& es,
                               const std::vector<int>& rs) {
  std::vector<Tuple> out;
  for (int e : es)
    for (int r : rs)
      for (int g : gs)
        for (int d : ds) out.push_back(Tuple{g, d, e, r});
  return out;
}

/// Evaluates one tuple; nullopt if the tuple is not a valid parameter set.
/// Invariant breaches propagate.
inline std::optional<SweepRecord> evaluate(const Tuple& tu) {
  std::optional<HypParams> p;
  try {
    p = HypParams::make(tu.g, tu.d, tu.e, tu.r);
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
  const HypersurfaceClosed closed = vtev_hypersurface_closed(p->g, p->d, p->e, p->r);
  const ExactInt engine = tev_hypersurface_engine(*p);
  SweepRecord rec;
  rec.g = p->g;
  rec.d = p->d;
  rec.e = p->e;
  rec.r = p->r;
  rec.n = p->n;
  rec.t = p->t;
  rec.value_closed = to_decimal(closed.value);
  rec.value_engine = to_decimal(engine);
  rec.agreement = closed.value == engine;
  rec.virtual_range = closed.virtual_range;
  rec.bound_ok = closed.bound_ok;
  rec.certified = certify_enumerative(p->g, p->d, p->e, p->r).certified;
  return rec;
}

/// Evaluates tuples on `jobs` worker threads; output order follows input
/// order. The first exception by tuple index is rethrown.
inline std::vector<SweepRecord> run_sweep(const std::vector<Tuple>& tuples, unsigned jobs = 1) {
  std::vector<std::optional<SweepRecord>> slots(tuples.size());
  std::vector<std::exception_ptr> errors(tuples.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tuples.size(); i = next++) {
      try {
        slots[i] = evaluate(tuples[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  std::vector<SweepRecord> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

inline const char* bool_str(bool b) { return b ? "true" : "false"; }

inline void write_csv(std::ostream& os, const std::vector<SweepRecord>& recs) {
  os << kCsvHeader << '\n';
  for (const auto& x : recs) {
    os << x.g << ',' << x.d << ',' << x.e << ',' << x.r << ',' << x.n << ',' << x.t << ',' << x.value_closed << ','
       << x.value_engine << ',' << bool_str(x.agreement) << ',' << bool_str(x.virtual_range) << ','
       << bool_str(x.bound_ok) << ',' << bool_str(x.certified) << '\n';
  }
}

inline void write_jsonl(std::ostream& os, const std::vector<SweepRecord>& recs) {
  for (const auto& x : recs) {
    nlohmann::ordered_json j;
    j["g"] = x.g;
    j["d"] = x.d;
    j["e"] = x.e;
    j["r"] = x.r;
    j["n"] = x.n;
    j["t"] = x.t;
    j["value_closed"] = x.value_closed;
    j["value_engine"] = x.value_engine;
    j["agreement"] = x.agreement;
    j["virtual_range"] = x.virtual_range;
    j["bound_ok"] = x.bound_ok;
    j["certified"] = x.certified;
    os << j.dump() << '\n';
  }
}

}  // namespace tev::cli
