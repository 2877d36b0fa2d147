#include "heisid/decider.hpp"

#include <algorithm>  // for reverse, sort, swap
#include <atomic>     // for atomic
#include <stdexcept>  // for invalid_argument, logic_error
#include <string>     // for to_string
#include <thread>     // for thread

#include "heisid/diophantine.hpp"

namespace heisid {

  namespace {

    // Runs fn(k) for k in [0, count) on up to `jobs` threads.
    template <typename Fn>
    void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
      if (jobs <= 1 || count <= 1) {
        for (std::size_t k = 0; k < count; ++k) {
          fn(k);
        }
        return;
      }
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      unsigned const workers = static_cast<unsigned>(
          std::min<std::size_t>(jobs, count));
      for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
          for (std::size_t k = next++; k < count; k = next++) {
            fn(k);
          }
        });
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    // Rows: every component of sum a, every component of sum b, and the
    // corner row when present. Columns are the given generators.
    QMatrix superdiagonal_rows(GeneratorSet const&             gens,
                               std::vector<std::size_t> const& cols,
                               bool                            corner_row) {
      std::size_t const dim = gens.n() - 2;
      QMatrix           A(2 * dim + (corner_row ? 1 : 0), cols.size());
      for (std::size_t k = 0; k < cols.size(); ++k) {
        HeisTriple const& g = gens.at(cols[k]);
        for (std::size_t d = 0; d < dim; ++d) {
          A(d, k)       = g.a()[d];
          A(dim + d, k) = g.b()[d];
        }
        if (corner_row) {
          A(2 * dim, k) = g.c() - dot(g.a(), g.b()) / Rational(2);
        }
      }
      return A;
    }

    std::vector<std::size_t> all_indices(std::size_t r) {
      std::vector<std::size_t> out(r);
      for (std::size_t k = 0; k < r; ++k) {
        out[k] = k;
      }
      return out;
    }

    RunSequence to_runs(std::vector<std::size_t> const& cols,
                        IntSolution const&              y) {
      RunSequence runs;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        if (y[k] > 0) {
          runs.push_back({cols[k], y[k]});
        }
      }
      return runs;
    }

    // Bron-Kerbosch with pivoting over an adjacency matrix. Candidates are
    // visited in increasing index order.
    void bron_kerbosch(std::vector<std::vector<bool>> const& adj,
                       std::vector<std::size_t>&              clique,
                       std::vector<std::size_t>               cand,
                       std::vector<std::size_t>               excl,
                       std::vector<std::vector<std::size_t>>& out) {
      if (cand.empty() && excl.empty()) {
        out.push_back(clique);
        std::sort(out.back().begin(), out.back().end());
        return;
      }
      std::size_t pivot      = cand.empty() ? excl.front() : cand.front();
      std::size_t best_count = 0;
      for (auto const* set : {&cand, &excl}) {
        for (std::size_t u : *set) {
          std::size_t count = 0;
          for (std::size_t v : cand) {
            count += adj[u][v] ? 1 : 0;
          }
          if (count > best_count) {
            best_count = count;
            pivot      = u;
          }
        }
      }
      std::vector<std::size_t> todo;
      for (std::size_t v : cand) {
        if (!adj[pivot][v]) {
          todo.push_back(v);
        }
      }
      for (std::size_t v : todo) {
        std::vector<std::size_t> next_cand, next_excl;
        for (std::size_t u : cand) {
          if (adj[v][u]) {
            next_cand.push_back(u);
          }
        }
        for (std::size_t u : excl) {
          if (adj[v][u]) {
            next_excl.push_back(u);
          }
        }
        clique.push_back(v);
        bron_kerbosch(adj, clique, std::move(next_cand), std::move(next_excl), out);
        clique.pop_back();
        cand.erase(std::find(cand.begin(), cand.end(), v));
        excl.insert(std::upper_bound(excl.begin(), excl.end(), v), v);
      }
    }

    // Corner of the arrangement scaled by l is L l + Q l^2; returns (L, Q).
    std::pair<Rational, Rational> corner_coefficients(GeneratorSet const& gens,
                                                      RunSequence const&  runs) {
      Rational    L, Q;
      QVector     a_prefix(gens.n() - 2);
      Rational const half(Integer(1), Integer(2));
      for (auto const& run : runs) {
        HeisTriple const& g  = gens.at(run.generator);
        Rational const    e(run.exponent);
        Rational const    ab = dot(g.a(), g.b());
        L += e * (g.c() - half * ab);
        Q += half * e * e * ab + e * dot(a_prefix, g.b());
        a_prefix += g.a() * e;
      }
      return {L, Q};
    }

    RunSequence scaled(RunSequence runs, Integer const& l) {
      for (auto& run : runs) {
        run.exponent *= l;
      }
      return runs;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Witness
  ////////////////////////////////////////////////////////////////////////

  Integer Witness::length() const {
    Integer total = 0;
    for (auto const& block : blocks) {
      Integer inner = 0;
      for (auto const& run : block.runs) {
        inner += run.exponent;
      }
      total += inner * block.repeat;
    }
    return total;
  }

  HeisTriple evaluate_witness(GeneratorSet const& gens, Witness const& w) {
    HeisTriple acc = HeisTriple::identity(gens.n());
    for (auto const& block : w.blocks) {
      if (block.runs.empty()) {
        continue;
      }
      acc = compose(acc, power(evaluate_runs(gens, block.runs), block.repeat));
    }
    return acc;
  }

  bool verify_witness(GeneratorSet const& gens, Witness const& w) {
    bool nonempty = false;
    for (auto const& block : w.blocks) {
      if (block.repeat < 1) {
        return false;
      }
      for (auto const& run : block.runs) {
        if (run.generator >= gens.size() || run.exponent < 1) {
          return false;
        }
        nonempty = true;
      }
    }
    return nonempty && evaluate_witness(gens, w).is_identity();
  }

  ////////////////////////////////////////////////////////////////////////
  // Commuting subsets
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::vector<std::size_t>>
  commuting_cliques(GeneratorSet const& gens) {
    std::size_t const              r = gens.size();
    std::vector<std::vector<bool>> adj(r, std::vector<bool>(r, false));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        adj[i][j] = adj[j][i] = commutes(gens[i], gens[j]);
      }
    }
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              clique;
    bron_kerbosch(adj, clique, all_indices(r), {}, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::optional<Witness> decide_commuting(GeneratorSet const&             gens,
                                          std::vector<std::size_t> const& clique) {
    if (clique.empty()) {
      return std::nullopt;
    }
    for (std::size_t x = 0; x < clique.size(); ++x) {
      for (std::size_t y = x + 1; y < clique.size(); ++y) {
        if (!commutes(gens.at(clique[x]), gens.at(clique[y]))) {
          throw std::invalid_argument(
              "decide_commuting: generators " + std::to_string(clique[x])
              + " and " + std::to_string(clique[y]) + " do not commute");
        }
      }
    }
    DiophantineSystem sys(superdiagonal_rows(gens, clique, true));
    auto              y = solve_homogeneous(sys);
    if (!y) {
      return std::nullopt;
    }
    Witness w = Witness::flat(to_runs(clique, *y));
    if (!verify_witness(gens, w)) {
      throw std::logic_error("commuting witness failed verification");
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Non-commuting pairs
  ////////////////////////////////////////////////////////////////////////

  std::optional<RunSequence> decide_noncommuting_pair(GeneratorSet const& gens,
                                                      std::size_t         i,
                                                      std::size_t         j) {
    if (commutes(gens.at(i), gens.at(j))) {
      throw std::invalid_argument("decide_noncommuting_pair: generators "
                                  + std::to_string(i) + " and "
                                  + std::to_string(j) + " commute");
    }
    auto const        cols = all_indices(gens.size());
    DiophantineSystem sys(superdiagonal_rows(gens, cols, false), {i, j});
    auto              y = solve_homogeneous(sys);
    if (!y) {
      return std::nullopt;
    }
    return to_runs(cols, *y);
  }

  SignFragment build_sign_witness(GeneratorSet const& gens,
                                  RunSequence const&  seq,
                                  std::size_t         i,
                                  std::size_t         j,
                                  int                 sign) {
    if (sign != 1 && sign != -1) {
      throw std::invalid_argument("build_sign_witness: sign must be +1 or -1");
    }
    Rational const kappa = commutator_form(gens.at(i), gens.at(j));
    if (kappa.is_zero()) {
      throw std::invalid_argument("build_sign_witness: generators "
                                  + std::to_string(i) + " and "
                                  + std::to_string(j) + " commute");
    }
    HeisTriple const base = evaluate_runs(gens, seq);
    if (!base.is_central()) {
      throw std::invalid_argument(
          "build_sign_witness: sequence has non-zero superdiagonal sums");
    }
    if (base.c().is_zero() || base.c().sign() == sign) {
      return {seq, base.c(), 1, 0};
    }

    // g_i g_j M_x with M_x = seq minus one occurrence of each of i, j.
    RunSequence rest = seq;
    for (std::size_t target : {i, j}) {
      auto it = std::find_if(rest.begin(), rest.end(), [&](Run const& run) {
        return run.generator == target && run.exponent > 0;
      });
      if (it == rest.end()) {
        throw std::invalid_argument("build_sign_witness: generator "
                                    + std::to_string(target)
                                    + " does not occur in the sequence");
      }
      it->exponent -= 1;
    }
    std::erase_if(rest, [](Run const& run) { return run.exponent == 0; });

    RunSequence forward{{i, 1}, {j, 1}};
    forward.insert(forward.end(), rest.begin(), rest.end());
    RunSequence swapped = forward;
    std::swap(swapped[0], swapped[1]);

    std::vector<RunSequence> candidates{forward, forward, swapped, swapped};
    std::reverse(candidates[1].begin(), candidates[1].end());
    std::reverse(candidates[3].begin(), candidates[3].end());

    for (auto const& arrangement : candidates) {
      auto const [L, Q] = corner_coefficients(gens, arrangement);
      if (Q.sign() != sign) {
        continue;
      }
      Integer     l     = 1;
      std::size_t steps = 1;
      while (true) {
        Rational const z = Rational(l) * (L + Q * Rational(l));
        if (z.is_zero() || z.sign() == sign) {
          RunSequence runs = scaled(arrangement, l);
          HeisTriple  got  = evaluate_runs(gens, runs);
          if (!got.is_central() || got.c() != z) {
            throw std::logic_error("sign fragment corner mismatch");
          }
          return {std::move(runs), z, l, steps};
        }
        l *= 2;
        ++steps;
      }
    }
    // Q(forward) - Q(swapped) equals the commutator form, and reversal
    // negates Q, so some candidate always has the requested sign.
    throw std::logic_error("build_sign_witness: no arrangement of the "
                           "requested sign");
  }

  Witness combine_signs(SignFragment const& positive,
                        SignFragment const& negative) {
    if (positive.corner.sign() <= 0 || negative.corner.sign() >= 0) {
      throw std::invalid_argument(
          "combine_signs: need corners c1 > 0 > c2, got " + positive.corner.str()
          + " and " + negative.corner.str());
    }
    Integer const p1 = positive.corner.numerator();
    Integer const q1 = positive.corner.denominator();
    Integer const p2 = negative.corner.numerator();
    Integer const q2 = negative.corner.denominator();
    Integer const e1 = -q1 * p2;
    Integer const e2 = q2 * p1;
    return Witness{{WitnessBlock{positive.runs, e1},
                    WitnessBlock{negative.runs, e2}}};
  }

  ////////////////////////////////////////////////////////////////////////
  // decide
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Generators that are positive in some solution of sum a = sum b = 0
    // over y >= 0, y != 0. Solutions add, so a pair i, j can be forced
    // positive together iff both lie in this set.
    std::vector<bool> support(GeneratorSet const& gens, unsigned jobs) {
      std::size_t const r    = gens.size();
      auto const        cols = all_indices(r);
      QMatrix const     A    = superdiagonal_rows(gens, cols, false);
      std::vector<bool> in(r, false);
      auto mark = [&](IntSolution const& y) {
        for (std::size_t k = 0; k < r; ++k) {
          if (y[k] > 0) {
            in[k] = true;
          }
        }
      };
      if (jobs <= 1) {
        for (std::size_t k = 0; k < r; ++k) {
          if (in[k]) {
            continue;
          }
          if (auto y = solve_homogeneous(DiophantineSystem(A, {k}))) {
            mark(*y);
          }
        }
        return in;
      }
      std::vector<std::optional<IntSolution>> sols(r);
      parallel_for(r, jobs, [&](std::size_t k) {
        sols[k] = solve_homogeneous(DiophantineSystem(A, {k}));
      });
      for (auto const& y : sols) {
        if (y) {
          mark(*y);
        }
      }
      return in;
    }

  }  // namespace

  Verdict decide(GeneratorSet const& gens, DecideOptions const& opts) {
    Verdict verdict;

    auto const                          cliques = commuting_cliques(gens);
    std::vector<std::optional<Witness>> found(cliques.size());
    if (opts.jobs <= 1) {
      for (std::size_t k = 0; k < cliques.size(); ++k) {
        found[k] = decide_commuting(gens, cliques[k]);
        if (found[k]) {
          break;
        }
      }
    } else {
      parallel_for(cliques.size(), opts.jobs, [&](std::size_t k) {
        found[k] = decide_commuting(gens, cliques[k]);
      });
    }
    for (std::size_t k = 0; k < cliques.size(); ++k) {
      if (found[k]) {
        verdict.answer  = Answer::yes;
        verdict.witness = std::move(found[k]);
        verdict.route   = Route::commuting;
        verdict.via     = cliques[k];
        return verdict;
      }
    }

    // First non-commuting pair, in index order, admitting a zero-sum
    // multiset that contains both.
    std::size_t const r  = gens.size();
    auto const        in = support(gens, opts.jobs);
    for (std::size_t i = 0; i < r; ++i) {
      if (!in[i]) {
        continue;
      }
      for (std::size_t j = i + 1; j < r; ++j) {
        if (!in[j] || commutes(gens[i], gens[j])) {
          continue;
        }
        auto seq = decide_noncommuting_pair(gens, i, j);
        if (!seq) {
          throw std::logic_error("pair in the support set has no solution");
        }
        SignFragment const pos = build_sign_witness(gens, *seq, i, j, 1);
        Witness            w;
        if (pos.corner.is_zero()) {
          w = Witness::flat(pos.runs);
        } else {
          SignFragment const neg = build_sign_witness(gens, *seq, i, j, -1);
          w = neg.corner.is_zero() ? Witness::flat(neg.runs)
                                   : combine_signs(pos, neg);
        }
        if (!verify_witness(gens, w)) {
          throw std::logic_error("non-commuting witness failed verification");
        }
        verdict.answer  = Answer::yes;
        verdict.witness = std::move(w);
        verdict.route   = Route::noncommuting;
        verdict.via     = {i, j};
        return verdict;
      }
    }
    return verdict;
  }

}  // namespace heisid
