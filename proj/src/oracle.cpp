#include "heisid/oracle.hpp"

#include <functional>     // for hash
#include <stdexcept>      // for invalid_argument
#include <unordered_set>  // for unordered_set

namespace heisid {

  namespace {
    struct TripleHash {
      std::size_t operator()(HeisTriple const& x) const noexcept {
        std::hash<Rational> h;
        std::size_t         seed = h(x.c());
        auto mix = [&seed](std::size_t v) {
          seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
        };
        for (auto const& v : x.a()) {
          mix(h(v));
        }
        for (auto const& v : x.b()) {
          mix(h(v));
        }
        return seed;
      }
    };

    struct Node {
      HeisTriple      value;
      ProductSequence path;
    };
  }  // namespace

  SearchResult bfs_identity(GeneratorSet const& gens, SearchConfig const& cfg) {
    if (cfg.max_length < 1) {
      throw std::invalid_argument("max_length must be >= 1");
    }
    SearchResult                               result;
    std::unordered_set<HeisTriple, TripleHash> seen;
    std::vector<Node>                          frontier;
    frontier.push_back({HeisTriple::identity(gens.n()), {}});

    // Frontier is kept in lexicographic order of paths, so children are
    // generated in lexicographic order within each depth.
    for (std::size_t depth = 1; depth <= cfg.max_length; ++depth) {
      std::vector<Node> next;
      for (auto const& node : frontier) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
          HeisTriple child = depth == 1 ? gens[g] : compose(node.value, gens[g]);
          ++result.states;
          if (child.is_identity()) {
            result.status   = SearchStatus::found;
            result.sequence = node.path;
            result.sequence->push_back(g);
            return result;
          }
          if (cfg.state_budget != 0 && result.states >= cfg.state_budget) {
            result.status = SearchStatus::budget_exhausted;
            return result;
          }
          if (depth == cfg.max_length) {
            continue;
          }
          if (cfg.dedup && !seen.insert(child).second) {
            continue;
          }
          ProductSequence path = node.path;
          path.push_back(g);
          next.push_back({std::move(child), std::move(path)});
        }
      }
      frontier = std::move(next);
    }
    result.status = SearchStatus::not_found;
    return result;
  }

}  // namespace heisid
