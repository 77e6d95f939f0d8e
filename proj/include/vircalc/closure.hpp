#pragma once

// Brute-force truncated closure: the least subspace of a padded monomial box
// that contains the seeds and is stable under every operator application
// landing inside the box. Used as the oracle against which every
// classification result is checked.

#include <deque>
#include <functional>
#include <vector>

#include "vircalc/action.hpp"
#include "vircalc/linalg.hpp"

namespace vircalc {

template <class Key>
struct ClosureRun {
  EchelonBasis basis;
  bool stopped_early = false;
  std::size_t applications = 0;
};

/// Generic worklist closure. `ops(v, emit)` calls emit(w) for every operator
/// image w of v; images outside `cols` are dropped. `done(basis)` may end the
/// run early once the caller has its answer.
template <class Key, class Ops>
ClosureRun<Key> run_closure(const Columns<Key>& cols, const std::vector<SparsePoly<Key>>& seeds, Ops&& ops,
                            const std::function<bool(const EchelonBasis&)>& done = {}) {
  ClosureRun<Key> run{EchelonBasis(cols.size())};
  std::deque<SparsePoly<Key>> work;
  auto offer = [&](const SparsePoly<Key>& p) {
    if (p.is_zero()) return false;
    auto row = cols.to_row(p);
    if (!row) return false;
    auto added = run.basis.insert(*row);
    if (!added) return false;
    work.push_back(cols.to_poly(*added));
    return done && done(run.basis);
  };
  for (const auto& s : seeds) {
    if (offer(s)) {
      run.stopped_early = true;
      return run;
    }
  }
  while (!work.empty()) {
    const SparsePoly<Key> v = std::move(work.front());
    work.pop_front();
    bool stop = false;
    ops(v, [&](const SparsePoly<Key>& w) {
      ++run.applications;
      if (!stop && offer(w)) stop = true;
    });
    if (stop) {
      run.stopped_early = true;
      return run;
    }
  }
  return run;
}

// ---------------------------------------------------------------------------
// The bivariate instance.

enum class OpSet { ST, SOnly };

struct Bounds {
  int A = 8;  // s-degree bound of the inner box
  int C = 8;  // t-degree bound of the inner box
  int pad = 4;
};

struct TruncatedSpan {
  Bounds bounds;
  std::vector<BiPoly> basis;  // echelon basis of (span ∩ inner box)
  bool fixpoint = true;       // false when the run stopped early
  std::size_t working_rank = 0;

  std::size_t dim() const { return basis.size(); }
  std::size_t box_dim() const { return static_cast<std::size_t>((bounds.A + 1) * (bounds.C + 1)); }
  bool is_full() const { return dim() == box_dim(); }
};

/// Emits every S^j (and T^j) image of f for the module.
inline void emit_operators(const ModuleParams& p, OpSet set, const BiPoly& f, const std::function<void(const BiPoly&)>& emit) {
  for (int j = 0; j <= max_S_index(f); ++j) emit(op_S(p, j, f));
  if (set == OpSet::ST) {
    for (int j = 0; j <= max_T_index(f); ++j) emit(op_T(p, j, f));
  }
}

inline bool within(const BiPoly& f, int A, int C) {
  for (const auto& [k, c] : f) {
    if (k.s > static_cast<std::uint32_t>(A) || k.t > static_cast<std::uint32_t>(C)) return false;
  }
  return true;
}

enum class StopWhen { Fixpoint, InnerFull, ReachesOne };

inline TruncatedSpan closure_truncated(const ModuleParams& p, const std::vector<BiPoly>& seeds, OpSet set,
                                       const Bounds& bounds, StopWhen stop = StopWhen::Fixpoint) {
  if (bounds.A < 0 || bounds.C < 0 || bounds.pad < 0) throw Error("negative closure bounds");
  for (const auto& s : seeds) {
    if (!within(s, bounds.A, bounds.C)) throw Error("closure seed exceeds the box bounds");
  }
  const Columns<BiExp> cols = box_columns(bounds.A + bounds.pad, bounds.C + bounds.pad, bounds.A, bounds.C);
  const int inner_start = cols.size() - (bounds.A + 1) * (bounds.C + 1);
  const int one_col = cols.index(BiExp{0, 0});

  std::function<bool(const EchelonBasis&)> done;
  if (stop == StopWhen::InnerFull) {
    done = [inner_start](const EchelonBasis& b) {
      for (int c = inner_start; c < b.ncols(); ++c) {
        if (!b.is_pivot(c)) return false;
      }
      return true;
    };
  } else if (stop == StopWhen::ReachesOne) {
    // (0,0) is the least significant column, so 1 is in the span exactly when it is a pivot.
    done = [one_col](const EchelonBasis& b) { return b.is_pivot(one_col); };
  }

  auto run = run_closure<BiExp>(
      cols, seeds, [&](const BiPoly& f, const auto& emit) { emit_operators(p, set, f, emit); }, done);

  TruncatedSpan out;
  out.bounds = bounds;
  out.fixpoint = !run.stopped_early;
  out.working_rank = run.basis.rank();
  for (const auto& row : run.basis.rows()) {
    if (row.front().first >= inner_start) out.basis.push_back(cols.to_poly(row));
  }
  return out;
}

/// Columns of the inner box alone, for comparing spans there.
inline Columns<BiExp> inner_columns(const Bounds& b) { return box_columns(b.A, b.C); }

/// True when 1 lies in the truncated closure (one-sided: false means "not within this box").
inline bool closure_reaches_one(const ModuleParams& p, const BiPoly& seed, OpSet set, const Bounds& bounds) {
  if (seed.is_zero()) return false;
  const auto span = closure_truncated(p, {seed}, set, bounds, StopWhen::ReachesOne);
  const auto cols = inner_columns(bounds);
  return echelon_of(cols, span.basis).contains(*cols.to_row(BiPoly(1)));
}

}  // namespace vircalc
