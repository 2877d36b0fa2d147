#ifndef HEISID_ORACLE_HPP_
#define HEISID_ORACLE_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional

#include "heisenberg.hpp"

namespace heisid {

  struct SearchConfig {
    std::size_t max_length = 8;
    //! Skip states whose triple was already reached at the same or a
    //! smaller depth.
    bool dedup = true;
    //! Upper bound on the number of states generated; 0 means unbounded.
    std::size_t state_budget = 0;
  };

  enum class SearchStatus { found, not_found, budget_exhausted };

  struct SearchResult {
    SearchStatus                   status = SearchStatus::not_found;
    std::optional<ProductSequence> sequence;
    std::size_t                    states = 0;
  };

  //! Breadth-first search for the shortest product equal to the identity,
  //! ties broken lexicographically by generator index. `not_found` means
  //! no identity product of length <= max_length exists; `budget_exhausted`
  //! means the search stopped early and proves nothing.
  SearchResult bfs_identity(GeneratorSet const& gens, SearchConfig const& cfg);

}  // namespace heisid

#endif  // HEISID_ORACLE_HPP_
