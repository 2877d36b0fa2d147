#ifndef HEISID_DECIDER_HPP_
#define HEISID_DECIDER_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "heisenberg.hpp"

namespace heisid {

  //! A run-length product raised to a positive power.
  struct WitnessBlock {
    RunSequence runs;
    Integer     repeat = 1;

    friend bool operator==(WitnessBlock const&, WitnessBlock const&) = default;
  };

  //! A product of generators certifying that the identity lies in the
  //! semigroup. Most witnesses are a single flat run list; the two-sign
  //! construction needs whole fragments raised to (possibly huge) powers,
  //! which is what blocks with repeat > 1 record. Nothing is ever expanded.
  struct Witness {
    std::vector<WitnessBlock> blocks;

    static Witness flat(RunSequence runs) {
      return Witness{{WitnessBlock{std::move(runs), 1}}};
    }

    bool is_flat() const {
      return blocks.size() == 1 && blocks.front().repeat == 1;
    }
    //! Total number of generator factors, i.e. the length of the expanded
    //! product.
    Integer length() const;

    friend bool operator==(Witness const&, Witness const&) = default;
  };

  //! The product the witness denotes, via closed-form powers.
  HeisTriple evaluate_witness(GeneratorSet const& gens, Witness const& w);

  //! True iff the witness is non-empty, uses valid indices and positive
  //! exponents, and evaluates to the identity.
  bool verify_witness(GeneratorSet const& gens, Witness const& w);

  enum class Answer { no, yes };

  enum class Route { none, commuting, noncommuting };

  struct Verdict {
    Answer                 answer = Answer::no;
    std::optional<Witness> witness;
    Route                  route = Route::none;
    //! The clique (commuting route) or the pair i < j (non-commuting route).
    std::vector<std::size_t> via;

    bool yes() const {
      return answer == Answer::yes;
    }
  };

  //! All maximal cliques of the graph with an edge between i != j iff the
  //! generators commute. Each clique is sorted; the list is sorted
  //! lexicographically.
  std::vector<std::vector<std::size_t>>
  commuting_cliques(GeneratorSet const& gens);

  //! Solves the multiplicities of a pairwise commuting subset: sum a = 0,
  //! sum b = 0 and sum (c - a.b / 2) = 0. The product of commuting factors
  //! with zero a and b sums has that corner in every order, so any solution
  //! is a witness. Throws std::invalid_argument if two members do not
  //! commute.
  std::optional<Witness> decide_commuting(GeneratorSet const&             gens,
                                          std::vector<std::size_t> const& clique);

  //! Multiplicities y >= 0 with sum y_k a_k = 0, sum y_k b_k = 0 and
  //! y_i, y_j >= 1, returned as runs in generator order. Throws
  //! std::invalid_argument if gens[i] and gens[j] commute.
  std::optional<RunSequence> decide_noncommuting_pair(GeneratorSet const& gens,
                                                      std::size_t         i,
                                                      std::size_t         j);

  //! A run-length product with a and b zero and corner of a prescribed sign.
  struct SignFragment {
    RunSequence runs;
    Rational    corner;
    Integer     scale = 1;   // every exponent of the chosen order times this
    std::size_t steps = 0;   // doubling steps taken, 0 if the input was used
  };

  //! Given runs `seq` whose a and b sums vanish and which contain the
  //! non-commuting generators i and j, produces a product with a = b = 0 and
  //! corner of sign `sign` (+1 or -1), or corner 0.
  //!
  //! The input order is tried first. Otherwise the arrangement
  //! g_i g_j M_x (M_x the rest of seq) is scaled by l (each exponent times
  //! l), giving corner L l + Q l^2. Swapping g_i, g_j shifts Q by the
  //! commutator form and reversing an arrangement negates Q, so one of the
  //! four arrangements has Q of the requested sign; l doubles from 1 until
  //! the corner follows.
  SignFragment build_sign_witness(GeneratorSet const& gens,
                                  RunSequence const&  seq,
                                  std::size_t         i,
                                  std::size_t         j,
                                  int                 sign);

  //! With corners c1 = p1/q1 > 0 > c2 = p2/q2, returns
  //! positive^(-q1 p2) negative^(q2 p1), whose corner is zero.
  Witness combine_signs(SignFragment const& positive,
                        SignFragment const& negative);

  struct DecideOptions {
    //! Worker threads for the independent per-clique and per-generator
    //! subproblems. The verdict does not depend on it.
    unsigned jobs = 1;
  };

  //! Decides whether the identity is a product of one or more generators.
  //! A YES verdict carries a witness that has been verified exactly.
  Verdict decide(GeneratorSet const& gens, DecideOptions const& opts = {});

}  // namespace heisid

#endif  // HEISID_DECIDER_HPP_
