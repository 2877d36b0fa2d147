#ifndef HEISID_ENCODINGS_HPP_
#define HEISID_ENCODINGS_HPP_

#include <array>    // for array
#include <cstddef>  // for size_t
#include <span>     // for span
#include <string>   // for string
#include <utility>  // for pair
#include <vector>   // for vector

#include "exactmath.hpp"

namespace heisid {

  //! A letter of a group alphabet: symbol id >= 1 and exponent +1 or -1.
  struct Letter {
    int symbol   = 1;
    int exponent = 1;

    Letter inverse() const {
      return {symbol, -exponent};
    }
    friend bool operator==(Letter const&, Letter const&) = default;
    friend auto operator<=>(Letter const&, Letter const&) = default;
  };

  //! A freely reduced word: no factor x x^-1.
  class GroupWord {
   public:
    GroupWord() = default;

    //! Free reduction of an arbitrary letter sequence.
    static GroupWord reduce(std::span<Letter const> letters);

    std::span<Letter const> letters() const {
      return _letters;
    }
    std::size_t size() const {
      return _letters.size();
    }
    bool empty() const {
      return _letters.empty();
    }

    GroupWord inverse() const;

    //! Concatenation followed by reduction.
    friend GroupWord operator*(GroupWord const& u, GroupWord const& v);

    friend bool operator==(GroupWord const&, GroupWord const&) = default;
    friend auto operator<=>(GroupWord const&, GroupWord const&) = default;

   private:
    std::vector<Letter> _letters;
  };

  GroupWord reduce(std::span<Letter const> letters);

  //! Symbols of the binary group alphabet {c, d} (written {a, b} when it is
  //! the target of f).
  inline constexpr int kBinaryC = 1;
  inline constexpr int kBinaryD = 2;

  //! z_i -> c^i d c^-i, z_i^-1 -> c^i d^-1 c^-i, extended to words and
  //! reduced. Injective on reduced words over any finite alphabet.
  GroupWord alpha(GroupWord const& w);

  //! c -> (1 2; 0 1), d -> (1 0; 2 1) and their inverses, multiplied out.
  //! The empty word maps to I_2. Throws std::invalid_argument on a symbol
  //! outside the binary alphabet.
  QMatrix f_sl2(GroupWord const& w);

  //! f_sl2(alpha(w)).
  QMatrix beta(GroupWord const& w);

  ////////////////////////////////////////////////////////////////////////
  // PCP -> SL(4, Z)
  ////////////////////////////////////////////////////////////////////////

  //! Fixed numbering of the combined alphabet before alpha is applied.
  enum PcpSymbol : int {
    kSymA  = 1,
    kSymB  = 2,
    kSymQ0 = 3,
    kSymQ1 = 4,
    kSymP0 = 5,
    kSymP1 = 6,
  };

  //! Morphisms g, h from {a_1, ..., a_n} to {a, b}*; images are strings
  //! over the characters 'a' and 'b'. A solution is assumed to begin with
  //! the first letter and to use it nowhere else.
  struct PCPInstance {
    std::vector<std::string> letters;
    std::vector<std::string> g;
    std::vector<std::string> h;

    std::size_t size() const {
      return letters.size();
    }
    //! Throws std::invalid_argument naming the offending field.
    void validate() const;
    //! Index of a letter name; throws std::invalid_argument if unknown.
    std::size_t index_of(std::string const& name) const;
  };

  //! Images under g and h of a word given as letter indices.
  std::pair<std::string, std::string> pcp_images(PCPInstance const&              inst,
                                                 std::vector<std::size_t> const& u);

  //! A positive word over {a, b} as a group word.
  GroupWord binary_word(std::string const& text);

  enum class GeneratorOrigin { w1, w2, b };

  struct SL4Generator {
    std::string     label;
    GeneratorOrigin origin;
    GroupWord       first;   // word encoded in the upper (or upper-right) block
    GroupWord       second;  // word encoded in the lower (or lower-left) block
    QMatrix         matrix;
  };

  //! n + 3 matrices: W1 pairs for a and b, one W2 pair per PCP letter, and
  //! the anti-diagonal B. A pair (u, v) becomes diag(beta(u), beta(v)); B is
  //! (0 beta(q1 q0^-1); beta(p1 p0^-1) 0). Bars on PCP images in W2 invert
  //! each letter in place (a b -> a^-1 b^-1), so that the W2 chain starting
  //! with a_1 cancels the W1 word spelling g(u) = h(u) backwards.
  std::vector<SL4Generator> pcp_to_generators(PCPInstance const& inst);

  //! Indices into pcp_to_generators(inst) whose product is I_4, for a
  //! solution u (letter indices). Candidate W2 chains and W1 placements are
  //! searched by free reduction and the winner is checked by exact 4x4
  //! multiplication. Throws std::invalid_argument if u is not a solution of
  //! the assumed form.
  std::vector<std::size_t> pcp_witness(PCPInstance const&              inst,
                                       std::vector<std::size_t> const& u);

  ////////////////////////////////////////////////////////////////////////
  // Pairs of words into SL(3, Q)
  ////////////////////////////////////////////////////////////////////////

  //! Images of (0, e), (1, e), (e, 0), (e, 1).
  std::array<QMatrix, 4> sl3q_embedding_matrices();

  struct EmbeddingCheck {
    std::string name;
    bool        passed = false;
    std::string detail;
  };

  struct EmbeddingReport {
    std::vector<EmbeddingCheck> checks;

    bool all_passed() const;
  };

  //! Exact checks of the relations, the non-relations, unit determinants
  //! and the freeness bound 1/8 + 1/27 < 1 for both pairs.
  EmbeddingReport verify_sl3q_embedding();

}  // namespace heisid

#endif  // HEISID_ENCODINGS_HPP_
