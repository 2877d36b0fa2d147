#ifndef HEISID_CLI_HPP_
#define HEISID_CLI_HPP_

#include <iosfwd>  // for ostream

namespace heisid {

  //! Exit codes shared by every subcommand.
  inline constexpr int kExitOk         = 0;  // YES, verified, found, all checks pass
  inline constexpr int kExitNo         = 1;  // NO, verification failed, not found
  inline constexpr int kExitInputError = 2;  // bad flags or malformed input

  //! Runs one subcommand (decide, witness-verify, oracle, dioph, encode-pcp,
  //! pcp-witness, verify-embedding) and returns its exit code.
  int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace heisid

#endif  // HEISID_CLI_HPP_
