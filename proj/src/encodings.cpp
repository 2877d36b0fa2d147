#include "heisid/encodings.hpp"

#include <algorithm>  // for find, reverse
#include <sstream>    // for ostringstream
#include <stdexcept>  // for invalid_argument, logic_error

namespace heisid {

  ////////////////////////////////////////////////////////////////////////
  // Free group words
  ////////////////////////////////////////////////////////////////////////

  GroupWord GroupWord::reduce(std::span<Letter const> letters) {
    GroupWord out;
    for (Letter const& x : letters) {
      if (x.exponent != 1 && x.exponent != -1) {
        throw std::invalid_argument("letter exponent must be +1 or -1");
      }
      if (!out._letters.empty() && out._letters.back() == x.inverse()) {
        out._letters.pop_back();
      } else {
        out._letters.push_back(x);
      }
    }
    return out;
  }

  GroupWord reduce(std::span<Letter const> letters) {
    return GroupWord::reduce(letters);
  }

  GroupWord GroupWord::inverse() const {
    GroupWord out;
    out._letters.reserve(_letters.size());
    for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
      out._letters.push_back(it->inverse());
    }
    return out;
  }

  GroupWord operator*(GroupWord const& u, GroupWord const& v) {
    GroupWord out = u;
    for (Letter const& x : v._letters) {
      if (!out._letters.empty() && out._letters.back() == x.inverse()) {
        out._letters.pop_back();
      } else {
        out._letters.push_back(x);
      }
    }
    return out;
  }

  GroupWord alpha(GroupWord const& w) {
    std::vector<Letter> out;
    for (Letter const& x : w.letters()) {
      if (x.symbol < 1) {
        throw std::invalid_argument("alpha: symbol ids start at 1");
      }
      out.insert(out.end(), static_cast<std::size_t>(x.symbol), Letter{kBinaryC, 1});
      out.push_back(Letter{kBinaryD, x.exponent});
      out.insert(out.end(), static_cast<std::size_t>(x.symbol), Letter{kBinaryC, -1});
    }
    return GroupWord::reduce(out);
  }

  QMatrix f_sl2(GroupWord const& w) {
    QMatrix m = QMatrix::identity(2);
    for (Letter const& x : w.letters()) {
      Rational const two(2 * x.exponent);
      QMatrix        image;
      if (x.symbol == kBinaryC) {
        image = QMatrix{{1, two}, {0, 1}};
      } else if (x.symbol == kBinaryD) {
        image = QMatrix{{1, 0}, {two, 1}};
      } else {
        throw std::invalid_argument("f_sl2: symbol " + std::to_string(x.symbol)
                                    + " is not in the binary alphabet");
      }
      m = m * image;
    }
    return m;
  }

  QMatrix beta(GroupWord const& w) {
    return f_sl2(alpha(w));
  }

  ////////////////////////////////////////////////////////////////////////
  // PCP
  ////////////////////////////////////////////////////////////////////////

  void PCPInstance::validate() const {
    if (letters.empty()) {
      throw std::invalid_argument("letters: need at least one letter");
    }
    if (g.size() != letters.size()) {
      throw std::invalid_argument("g: expected " + std::to_string(letters.size())
                                  + " images, got " + std::to_string(g.size()));
    }
    if (h.size() != letters.size()) {
      throw std::invalid_argument("h: expected " + std::to_string(letters.size())
                                  + " images, got " + std::to_string(h.size()));
    }
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (letters[i].empty()) {
        throw std::invalid_argument("letters[" + std::to_string(i) + "]: empty name");
      }
      if (std::find(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(i),
                    letters[i])
          != letters.begin() + static_cast<std::ptrdiff_t>(i)) {
        throw std::invalid_argument("letters[" + std::to_string(i)
                                    + "]: duplicate name '" + letters[i] + "'");
      }
      for (auto const* side : {&g, &h}) {
        for (char ch : (*side)[i]) {
          if (ch != 'a' && ch != 'b') {
            throw std::invalid_argument(std::string(side == &g ? "g" : "h") + "["
                                        + std::to_string(i)
                                        + "]: images must be words over {a, b}");
          }
        }
      }
    }
  }

  std::size_t PCPInstance::index_of(std::string const& name) const {
    auto it = std::find(letters.begin(), letters.end(), name);
    if (it == letters.end()) {
      throw std::invalid_argument("unknown letter '" + name + "'");
    }
    return static_cast<std::size_t>(it - letters.begin());
  }

  std::pair<std::string, std::string> pcp_images(PCPInstance const&              inst,
                                                 std::vector<std::size_t> const& u) {
    std::string gu, hu;
    for (std::size_t k : u) {
      if (k >= inst.size()) {
        throw std::invalid_argument("letter index " + std::to_string(k)
                                    + " out of range");
      }
      gu += inst.g[k];
      hu += inst.h[k];
    }
    return {gu, hu};
  }

  GroupWord binary_word(std::string const& text) {
    std::vector<Letter> letters;
    for (char ch : text) {
      if (ch != 'a' && ch != 'b') {
        throw std::invalid_argument("binary word must be over {a, b}");
      }
      letters.push_back({ch == 'a' ? kSymA : kSymB, 1});
    }
    return GroupWord::reduce(letters);
  }

  namespace {

    GroupWord letter(int symbol, int exponent = 1) {
      Letter x{symbol, exponent};
      return GroupWord::reduce(std::span<Letter const>(&x, 1));
    }

    // Each letter inverted in place, order kept.
    GroupWord letterwise_inverse(GroupWord const& w) {
      std::vector<Letter> out;
      for (Letter const& x : w.letters()) {
        out.push_back(x.inverse());
      }
      return GroupWord::reduce(out);
    }

    QMatrix block_diagonal(QMatrix const& upper, QMatrix const& lower) {
      QMatrix m(4, 4);
      m.set_block(0, 0, upper);
      m.set_block(2, 2, lower);
      return m;
    }

    QMatrix anti_diagonal(QMatrix const& upper_right, QMatrix const& lower_left) {
      QMatrix m(4, 4);
      m.set_block(0, 2, upper_right);
      m.set_block(2, 0, lower_left);
      return m;
    }

    SL4Generator pair_generator(std::string label, GeneratorOrigin origin,
                                GroupWord u, GroupWord v) {
      QMatrix m = block_diagonal(beta(u), beta(v));
      return {std::move(label), origin, std::move(u), std::move(v), std::move(m)};
    }

    // Labels of the generators spelling a positive word over {a, b} with
    // W1 pairs.
    std::vector<std::size_t> spell_w1(GroupWord const& x, bool& ok) {
      std::vector<std::size_t> out;
      for (Letter const& l : x.letters()) {
        if (l.exponent != 1 || (l.symbol != kSymA && l.symbol != kSymB)) {
          ok = false;
          return {};
        }
        out.push_back(l.symbol == kSymA ? 0 : 1);
      }
      ok = true;
      return out;
    }

  }  // namespace

  std::vector<SL4Generator> pcp_to_generators(PCPInstance const& inst) {
    inst.validate();
    GroupWord const q0 = letter(kSymQ0), q1 = letter(kSymQ1);
    GroupWord const p0 = letter(kSymP0), p1 = letter(kSymP1);

    std::vector<SL4Generator> out;
    for (int sym : {kSymA, kSymB}) {
      GroupWord const x = letter(sym);
      out.push_back(pair_generator(sym == kSymA ? "W1:a" : "W1:b",
                                   GeneratorOrigin::w1,
                                   q0 * x * q0.inverse(),
                                   p0 * x * p0.inverse()));
    }
    for (std::size_t i = 0; i < inst.size(); ++i) {
      GroupWord const gi = letterwise_inverse(binary_word(inst.g[i]));
      GroupWord const hi = letterwise_inverse(binary_word(inst.h[i]));
      GroupWord const& q_in = i == 0 ? q0 : q1;
      GroupWord const& p_in = i == 0 ? p0 : p1;
      out.push_back(pair_generator("W2:" + inst.letters[i],
                                   GeneratorOrigin::w2,
                                   q_in * gi * q1.inverse(),
                                   p_in * hi * p1.inverse()));
    }
    GroupWord const upper = q1 * q0.inverse();
    GroupWord const lower = p1 * p0.inverse();
    out.push_back({"B", GeneratorOrigin::b, upper, lower,
                   anti_diagonal(beta(upper), beta(lower))});
    return out;
  }

  std::vector<std::size_t> pcp_witness(PCPInstance const&              inst,
                                       std::vector<std::size_t> const& u) {
    inst.validate();
    if (u.empty()) {
      throw std::invalid_argument("pcp_witness: solution must be non-empty");
    }
    auto const [gu, hu] = pcp_images(inst, u);
    if (gu != hu) {
      throw std::invalid_argument("pcp_witness: not a solution, g(u) = '" + gu
                                  + "' but h(u) = '" + hu + "'");
    }
    if (u.front() != 0
        || std::find(u.begin() + 1, u.end(), std::size_t{0}) != u.end()) {
      throw std::invalid_argument("pcp_witness: the solution must start with '"
                                  + inst.letters.front()
                                  + "' and use it only there");
    }

    auto const        gens  = pcp_to_generators(inst);
    std::size_t const b_idx = gens.size() - 1;
    GroupWord const   q0 = letter(kSymQ0), q1 = letter(kSymQ1);
    GroupWord const   p0 = letter(kSymP0), p1 = letter(kSymP1);
    GroupWord const   target1 = q0 * q1.inverse();
    GroupWord const   target2 = p0 * p1.inverse();

    // The solution fixes the W2 letters; try them in solution order and
    // with the tail reversed, with the W1 block before or after the chain.
    std::vector<std::size_t> tail(u.begin() + 1, u.end());
    std::vector<std::size_t> reversed_tail(tail.rbegin(), tail.rend());
    for (auto const* order : {&tail, &reversed_tail}) {
      std::vector<std::size_t> chain{2};
      for (std::size_t k : *order) {
        chain.push_back(2 + k);
      }
      GroupWord c1, c2;
      for (std::size_t idx : chain) {
        c1 = c1 * gens[idx].first;
        c2 = c2 * gens[idx].second;
      }
      for (bool w1_first : {true, false}) {
        // Solve (q0 x q0^-1) C = target or C (q0 x q0^-1) = target for x.
        GroupWord x1, x2;
        if (w1_first) {
          x1 = q0.inverse() * target1 * c1.inverse() * q0;
          x2 = p0.inverse() * target2 * c2.inverse() * p0;
        } else {
          x1 = q0.inverse() * c1.inverse() * target1 * q0;
          x2 = p0.inverse() * c2.inverse() * target2 * p0;
        }
        if (x1 != x2) {
          continue;
        }
        bool       ok   = false;
        auto const head = spell_w1(x1, ok);
        if (!ok) {
          continue;
        }
        std::vector<std::size_t> half = w1_first ? head : chain;
        auto const&              rest = w1_first ? chain : head;
        half.insert(half.end(), rest.begin(), rest.end());
        half.push_back(b_idx);

        std::vector<std::size_t> seq = half;
        seq.insert(seq.end(), half.begin(), half.end());
        QMatrix prod = QMatrix::identity(4);
        for (std::size_t idx : seq) {
          prod = prod * gens[idx].matrix;
        }
        if (prod.is_identity()) {
          return seq;
        }
      }
    }
    throw std::logic_error("pcp_witness: no identity product found for a "
                           "valid solution");
  }

  ////////////////////////////////////////////////////////////////////////
  // SL(3, Q) embedding
  ////////////////////////////////////////////////////////////////////////

  std::array<QMatrix, 4> sl3q_embedding_matrices() {
    Rational const half(Integer(1), Integer(2));
    Rational const third(Integer(1), Integer(3));
    return {QMatrix{{4, 0, 0}, {0, half, 0}, {0, 0, half}},
            QMatrix{{9, third, 0}, {0, third, 0}, {0, 0, third}},
            QMatrix{{half, 0, 0}, {0, half, 0}, {0, 0, 4}},
            QMatrix{{third, 0, 0}, {0, third, 0}, {0, third, 9}}};
  }

  bool EmbeddingReport::all_passed() const {
    return !checks.empty()
           && std::all_of(checks.begin(), checks.end(),
                          [](auto const& c) { return c.passed; });
  }

  EmbeddingReport verify_sl3q_embedding() {
    auto const [A, B, C, D] = sl3q_embedding_matrices();
    EmbeddingReport report;

    auto relation = [&](char const* name, QMatrix const& x, QMatrix const& y,
                        bool expect_equal) {
      QMatrix const xy = x * y;
      QMatrix const yx = y * x;
      std::ostringstream detail;
      detail << xy << (xy == yx ? " == " : " != ") << yx;
      report.checks.push_back({name, (xy == yx) == expect_equal, detail.str()});
    };
    relation("AC = CA", A, C, true);
    relation("AD = DA", A, D, true);
    relation("BC = CB", B, C, true);
    relation("BD = DB", B, D, true);
    relation("AB != BA", A, B, false);
    relation("CD != DC", C, D, false);

    char const* names[] = {"det A = 1", "det B = 1", "det C = 1", "det D = 1"};
    for (std::size_t k = 0; k < 4; ++k) {
      QMatrix const& m = k == 0 ? A : k == 1 ? B : k == 2 ? C : D;
      Rational const det = determinant(m);
      report.checks.push_back({names[k], det == Rational(1), det.str()});
    }

    // Scaling the 2x2 blocks by 2 and 3 gives diagonal entries 8 and 27;
    // 1/|x| + 1/|y| <= 1 makes the pair free.
    auto bound = [&](char const* name, Rational const& x, Rational const& y) {
      Rational const sum = Rational(1) / x.abs() + Rational(1) / y.abs();
      bool const ok = sum == Rational(Integer(35), Integer(216)) && sum < Rational(1);
      report.checks.push_back({name, ok, "1/" + x.str() + " + 1/" + y.str() + " = "
                                             + sum.str() + " < 1"});
    };
    bound("{A, B} free", Rational(2) * A(0, 0),
          Rational(3) * B(0, 0));
    bound("{C, D} free", Rational(2) * C(2, 2),
          Rational(3) * D(2, 2));
    return report;
  }

}  // namespace heisid
