#ifndef HEISID_IO_HPP_
#define HEISID_IO_HPP_

#include <stdexcept>  // for runtime_error
#include <string>     // for string

#include <json.hpp>

#include "decider.hpp"
#include "diophantine.hpp"
#include "encodings.hpp"
#include "heisenberg.hpp"
#include "oracle.hpp"

// JSON file formats. Rationals and big integers are decimal strings ("p" or
// "p/q"); plain JSON integers are accepted on input.
//
//   instance  {"n": 3, "generators": [{"a": ["2"], "b": ["7"], "c": "20"}, ...]}
//             a generator may instead be a row-major matrix
//             [["1", "2", "20"], ["0", "1", "7"], ["0", "0", "1"]]
//   verdict   {"answer": "yes", "witness": [[0, "3"], [1, "5"]]}
//             a witness element is either a run [generator, "exponent"] or a
//             repeated block {"repeat": "22", "runs": [[0, "1"], ...]}
//   dioph     {"A": [["2", "3", "-4", "-1"], ...], "forced": [0, 2]}
//   pcp       {"letters": ["a1", "a2"], "g": ["ab", "b"], "h": ["a", "bb"]}

namespace heisid::io {

  using json = nlohmann::json;

  //! Malformed input; the message starts with the offending field path.
  class InputError : public std::runtime_error {
   public:
    InputError(std::string const& field, std::string const& what)
        : std::runtime_error(field + ": " + what), _field(field) {}

    std::string const& field() const {
      return _field;
    }

   private:
    std::string _field;
  };

  json        parse_text(std::string const& text, std::string const& source);
  json        read_file(std::string const& path);

  Rational    rational_from_json(json const& j, std::string const& field);
  json        rational_to_json(Rational const& x);

  HeisTriple   triple_from_json(json const& j, std::size_t n, std::string const& field);
  json         triple_to_json(HeisTriple const& x);
  GeneratorSet instance_from_json(json const& j);
  json         instance_to_json(GeneratorSet const& gens);

  json    witness_to_json(Witness const& w);
  //! Accepts a bare witness array or a verdict object carrying one.
  Witness witness_from_json(json const& j);
  json    verdict_to_json(Verdict const& v);

  DiophantineSystem dioph_from_json(json const& j);
  json              int_solution_to_json(IntSolution const& y);

  PCPInstance pcp_from_json(json const& j);
  json        matrix_to_json(QMatrix const& m);
  json        sl4_generators_to_json(std::vector<SL4Generator> const& gens);

  json search_result_to_json(SearchResult const& r, SearchConfig const& cfg);

}  // namespace heisid::io

#endif  // HEISID_IO_HPP_
