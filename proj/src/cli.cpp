#include "heisid/cli.hpp"

#include <algorithm>  // for replace
#include <ostream>    // for ostream
#include <sstream>  // for istringstream
#include <string>   // for string

#include <CLI11.hpp>

#include "heisid/io.hpp"

namespace heisid {

  namespace {

    using io::json;

    struct Options {
      std::string input;
      std::string witness;
      std::string solution;
      std::string format  = "json";
      std::size_t max_len = 8;
      std::size_t budget  = 0;
      bool        no_dedup = false;
      unsigned    jobs     = 1;

      bool text() const {
        return format == "text";
      }
    };

    void print_json(std::ostream& out, json const& j) {
      out << j.dump(2) << '\n';
    }

    std::string runs_text(RunSequence const& runs) {
      std::string s;
      for (auto const& run : runs) {
        if (!s.empty()) {
          s += ' ';
        }
        s += "g" + std::to_string(run.generator);
        if (run.exponent != 1) {
          s += "^" + to_string(run.exponent);
        }
      }
      return s;
    }

    std::string witness_text(Witness const& w) {
      std::string s;
      for (auto const& block : w.blocks) {
        if (!s.empty()) {
          s += ' ';
        }
        if (block.repeat == 1) {
          s += runs_text(block.runs);
        } else {
          s += "(" + runs_text(block.runs) + ")^" + to_string(block.repeat);
        }
      }
      return s;
    }

    int cmd_decide(Options const& o, std::ostream& out) {
      auto const    gens = io::instance_from_json(io::read_file(o.input));
      DecideOptions opts;
      opts.jobs    = o.jobs;
      Verdict const v = decide(gens, opts);
      if (o.text()) {
        out << (v.yes() ? "YES" : "NO") << '\n';
        if (v.witness) {
          out << witness_text(*v.witness) << '\n';
        }
      } else {
        print_json(out, io::verdict_to_json(v));
      }
      return v.yes() ? kExitOk : kExitNo;
    }

    int cmd_witness_verify(Options const& o, std::ostream& out) {
      auto const gens = io::instance_from_json(io::read_file(o.input));
      auto const w    = io::witness_from_json(io::read_file(o.witness));
      for (std::size_t b = 0; b < w.blocks.size(); ++b) {
        for (std::size_t k = 0; k < w.blocks[b].runs.size(); ++k) {
          if (w.blocks[b].runs[k].generator >= gens.size()) {
            throw io::InputError("witness", "generator index "
                                                + std::to_string(w.blocks[b].runs[k].generator)
                                                + " out of range");
          }
        }
      }
      bool const ok = verify_witness(gens, w);
      if (o.text()) {
        out << (ok ? "identity" : "not identity") << '\n';
      } else {
        json j = {{"identity", ok}};
        if (!w.blocks.empty()) {
          j["product"] = io::triple_to_json(evaluate_witness(gens, w));
        }
        print_json(out, j);
      }
      return ok ? kExitOk : kExitNo;
    }

    int cmd_oracle(Options const& o, std::ostream& out) {
      auto const   gens = io::instance_from_json(io::read_file(o.input));
      SearchConfig cfg;
      cfg.max_length   = o.max_len;
      cfg.dedup        = !o.no_dedup;
      cfg.state_budget = o.budget;
      auto const r     = bfs_identity(gens, cfg);
      if (o.text()) {
        switch (r.status) {
          case SearchStatus::found: {
            for (std::size_t k = 0; k < r.sequence->size(); ++k) {
              out << (k ? " " : "") << (*r.sequence)[k];
            }
            out << '\n';
            break;
          }
          case SearchStatus::not_found:
            out << "not found <= " << cfg.max_length << '\n';
            break;
          case SearchStatus::budget_exhausted:
            out << "budget exhausted after " << r.states << " states\n";
            break;
        }
      } else {
        print_json(out, io::search_result_to_json(r, cfg));
      }
      return r.status == SearchStatus::found ? kExitOk : kExitNo;
    }

    int cmd_dioph(Options const& o, std::ostream& out) {
      auto const sys = io::dioph_from_json(io::read_file(o.input));
      auto const y   = solve_homogeneous(sys);
      if (o.text()) {
        if (y) {
          for (std::size_t k = 0; k < y->size(); ++k) {
            out << (k ? " " : "") << to_string((*y)[k]);
          }
          out << '\n';
        } else {
          out << "no solution\n";
        }
      } else {
        json j = {{"solvable", y.has_value()}};
        if (y) {
          j["solution"] = io::int_solution_to_json(*y);
        }
        print_json(out, j);
      }
      return y ? kExitOk : kExitNo;
    }

    int cmd_encode_pcp(Options const& o, std::ostream& out) {
      auto const inst = io::pcp_from_json(io::read_file(o.input));
      auto const gens = pcp_to_generators(inst);
      if (o.text()) {
        for (auto const& g : gens) {
          out << g.label << '\n' << g.matrix << '\n';
        }
      } else {
        print_json(out, io::sl4_generators_to_json(gens));
      }
      return kExitOk;
    }

    int cmd_pcp_witness(Options const& o, std::ostream& out) {
      auto const               inst = io::pcp_from_json(io::read_file(o.input));
      std::vector<std::size_t> u;
      std::string              name;
      std::string              spaced = o.solution;
      std::replace(spaced.begin(), spaced.end(), ',', ' ');
      std::istringstream in(spaced);
      while (in >> name) {
        try {
          u.push_back(inst.index_of(name));
        } catch (std::invalid_argument const& e) {
          throw io::InputError("--solution", e.what());
        }
      }
      std::vector<std::size_t> seq;
      try {
        seq = pcp_witness(inst, u);
      } catch (std::invalid_argument const& e) {
        throw io::InputError("--solution", e.what());
      }
      auto const gens = pcp_to_generators(inst);
      if (o.text()) {
        for (std::size_t k = 0; k < seq.size(); ++k) {
          out << (k ? " " : "") << gens[seq[k]].label;
        }
        out << '\n';
      } else {
        json labels = json::array();
        for (auto k : seq) {
          labels.push_back(gens[k].label);
        }
        print_json(out, {{"sequence", seq}, {"labels", labels}});
      }
      return kExitOk;
    }

    int cmd_verify_embedding(Options const& o, std::ostream& out) {
      auto const report = verify_sl3q_embedding();
      if (o.text()) {
        for (auto const& c : report.checks) {
          out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        }
      } else {
        json checks = json::array();
        for (auto const& c : report.checks) {
          checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        }
        print_json(out, {{"all_passed", report.all_passed()}, {"checks", checks}});
      }
      return report.all_passed() ? kExitOk : kExitNo;
    }

  }  // namespace

  int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Identity problem for Heisenberg matrix semigroups", "heisid"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_format = [&o](CLI::App* sub) {
      sub->add_option("--format", o.format, "Output format")
          ->check(CLI::IsMember({"json", "text"}));
    };
    auto add_input = [&o](CLI::App* sub, char const* what) {
      sub->add_option("-i,--input", o.input, what)->required();
    };

    auto* decide_cmd = app.add_subcommand("decide", "Decide whether the identity is a product");
    add_input(decide_cmd, "Instance JSON");
    decide_cmd->add_option("-j,--jobs", o.jobs, "Worker threads")
        ->check(CLI::Range(1u, 256u));
    add_format(decide_cmd);

    auto* verify_cmd = app.add_subcommand("witness-verify", "Multiply out a witness");
    add_input(verify_cmd, "Instance JSON");
    verify_cmd->add_option("-w,--witness", o.witness, "Witness or verdict JSON")->required();
    add_format(verify_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "Breadth-first search for a short identity product");
    add_input(oracle_cmd, "Instance JSON");
    oracle_cmd->add_option("-L,--max-len", o.max_len, "Maximum product length")
        ->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--budget", o.budget, "Maximum number of states, 0 for none");
    oracle_cmd->add_flag("--no-dedup", o.no_dedup, "Keep repeated group elements");
    add_format(oracle_cmd);

    auto* dioph_cmd = app.add_subcommand("dioph", "Solve a homogeneous system over the naturals");
    add_input(dioph_cmd, "System JSON");
    add_format(dioph_cmd);

    auto* encode_cmd = app.add_subcommand("encode-pcp", "Emit SL(4,Z) generators for a PCP instance");
    add_input(encode_cmd, "PCP JSON");
    add_format(encode_cmd);

    auto* pcpw_cmd = app.add_subcommand("pcp-witness", "Identity product for a PCP solution");
    add_input(pcpw_cmd, "PCP JSON");
    pcpw_cmd->add_option("-s,--solution", o.solution, "Letter names, e.g. \"a1 a2\"")->required();
    add_format(pcpw_cmd);

    auto* embed_cmd = app.add_subcommand("verify-embedding", "Check the SL(3,Q) embedding");
    add_format(embed_cmd);

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitInputError;
    }

    try {
      if (*decide_cmd) {
        return cmd_decide(o, out);
      }
      if (*verify_cmd) {
        return cmd_witness_verify(o, out);
      }
      if (*oracle_cmd) {
        return cmd_oracle(o, out);
      }
      if (*dioph_cmd) {
        return cmd_dioph(o, out);
      }
      if (*encode_cmd) {
        return cmd_encode_pcp(o, out);
      }
      if (*pcpw_cmd) {
        return cmd_pcp_witness(o, out);
      }
      return cmd_verify_embedding(o, out);
    } catch (io::InputError const& e) {
      err << "error: " << e.what() << '\n';
      return kExitInputError;
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << '\n';
      return kExitInputError;
    }
  }

}  // namespace heisid
