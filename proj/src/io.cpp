#include "heisid/io.hpp"

#include <fstream>   // for ifstream
#include <sstream>   // for stringstream

namespace heisid::io {

  namespace {

    std::string at(std::string const& field, std::size_t i) {
      return field + "[" + std::to_string(i) + "]";
    }

    std::string dot_field(std::string const& field, std::string const& key) {
      return field.empty() ? key : field + "." + key;
    }

    json const& member(json const& j, std::string const& key,
                       std::string const& field) {
      if (!j.is_object()) {
        throw InputError(field.empty() ? "<root>" : field, "expected an object");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        throw InputError(dot_field(field, key), "missing");
      }
      return *it;
    }

    json const& array(json const& j, std::string const& field) {
      if (!j.is_array()) {
        throw InputError(field, "expected an array");
      }
      return j;
    }

    Integer integer_from_json(json const& j, std::string const& field) {
      try {
        if (j.is_string()) {
          return parse_integer(j.get<std::string>());
        }
        if (j.is_number_integer()) {
          return parse_integer(j.dump());
        }
      } catch (std::invalid_argument const& e) {
        throw InputError(field, e.what());
      }
      throw InputError(field, "expected an integer (decimal string)");
    }

    std::size_t index_from_json(json const& j, std::string const& field) {
      if (!j.is_number_unsigned()) {
        throw InputError(field, "expected a non-negative integer index");
      }
      return j.get<std::size_t>();
    }

    QMatrix matrix_from_json(json const& j, std::string const& field) {
      array(j, field);
      std::size_t const rows = j.size();
      if (rows == 0) {
        throw InputError(field, "empty matrix");
      }
      std::size_t const cols = array(j[0], at(field, 0)).size();
      QMatrix           m(rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        auto const& row = array(j[r], at(field, r));
        if (row.size() != cols) {
          throw InputError(at(field, r), "ragged matrix row");
        }
        for (std::size_t c = 0; c < cols; ++c) {
          m(r, c) = rational_from_json(row[c], at(at(field, r), c));
        }
      }
      return m;
    }

    Run run_from_json(json const& j, std::string const& field) {
      if (!j.is_array() || j.size() != 2) {
        throw InputError(field, "expected [generator, \"exponent\"]");
      }
      return {index_from_json(j[0], field + "[0]"), integer_from_json(j[1], field + "[1]")};
    }

    RunSequence runs_from_json(json const& j, std::string const& field) {
      RunSequence runs;
      array(j, field);
      for (std::size_t k = 0; k < j.size(); ++k) {
        runs.push_back(run_from_json(j[k], at(field, k)));
      }
      return runs;
    }

    json runs_to_json(RunSequence const& runs) {
      json out = json::array();
      for (auto const& run : runs) {
        out.push_back(json::array({run.generator, to_string(run.exponent)}));
      }
      return out;
    }

  }  // namespace

  json parse_text(std::string const& text, std::string const& source) {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      throw InputError(source, std::string("invalid JSON: ") + e.what());
    }
  }

  json read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError(path, "cannot open file");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
  }

  Rational rational_from_json(json const& j, std::string const& field) {
    try {
      if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
      }
      if (j.is_number_integer()) {
        return Rational::parse(j.dump());
      }
    } catch (std::exception const& e) {
      throw InputError(field, e.what());
    }
    throw InputError(field, "expected a rational (string \"p\" or \"p/q\")");
  }

  json rational_to_json(Rational const& x) {
    return x.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Instances
  ////////////////////////////////////////////////////////////////////////

  HeisTriple triple_from_json(json const& j, std::size_t n,
                              std::string const& field) {
    if (j.is_array()) {
      QMatrix m = matrix_from_json(j, field);
      if (m.rows() != n || m.cols() != n) {
        throw InputError(field, "expected a " + std::to_string(n) + "x"
                                    + std::to_string(n) + " matrix");
      }
      try {
        return to_triple(m);
      } catch (std::invalid_argument const& e) {
        throw InputError(field, e.what());
      }
    }
    auto vec = [&](std::string const& key) {
      auto const  f = dot_field(field, key);
      auto const& v = array(member(j, key, field), f);
      if (v.size() != n - 2) {
        throw InputError(f, "expected " + std::to_string(n - 2) + " entries, got "
                                + std::to_string(v.size()));
      }
      QVector out(n - 2);
      for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = rational_from_json(v[i], at(f, i));
      }
      return out;
    };
    QVector a = vec("a");
    QVector b = vec("b");
    return HeisTriple(std::move(a), std::move(b),
                      rational_from_json(member(j, "c", field), dot_field(field, "c")));
  }

  json triple_to_json(HeisTriple const& x) {
    json a = json::array(), b = json::array();
    for (auto const& v : x.a()) {
      a.push_back(v.str());
    }
    for (auto const& v : x.b()) {
      b.push_back(v.str());
    }
    return {{"a", a}, {"b", b}, {"c", x.c().str()}};
  }

  GeneratorSet instance_from_json(json const& j) {
    auto const& nj = member(j, "n", "");
    if (!nj.is_number_unsigned() || nj.get<std::size_t>() < 3) {
      throw InputError("n", "expected an integer >= 3");
    }
    std::size_t const n    = nj.get<std::size_t>();
    auto const&       gens = array(member(j, "generators", ""), "generators");
    if (gens.empty()) {
      throw InputError("generators", "need at least one generator");
    }
    std::vector<HeisTriple> out;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      out.push_back(triple_from_json(gens[k], n, at("generators", k)));
    }
    return GeneratorSet(std::move(out));
  }

  json instance_to_json(GeneratorSet const& gens) {
    json list = json::array();
    for (auto const& g : gens) {
      list.push_back(triple_to_json(g));
    }
    return {{"n", gens.n()}, {"generators", list}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Witnesses and verdicts
  ////////////////////////////////////////////////////////////////////////

  json witness_to_json(Witness const& w) {
    json out = json::array();
    for (auto const& block : w.blocks) {
      if (block.repeat == 1) {
        for (auto const& run : block.runs) {
          out.push_back(json::array({run.generator, to_string(run.exponent)}));
        }
      } else {
        out.push_back({{"repeat", to_string(block.repeat)},
                       {"runs", runs_to_json(block.runs)}});
      }
    }
    return out;
  }

  Witness witness_from_json(json const& j) {
    std::string field = "witness";
    json const* list  = &j;
    if (j.is_object()) {
      list = &member(j, "witness", "");
    }
    array(*list, field);
    Witness w;
    for (std::size_t k = 0; k < list->size(); ++k) {
      auto const& item = (*list)[k];
      auto const  f    = at(field, k);
      if (item.is_object()) {
        WitnessBlock block;
        block.repeat = integer_from_json(member(item, "repeat", f), f + ".repeat");
        block.runs   = runs_from_json(member(item, "runs", f), f + ".runs");
        w.blocks.push_back(std::move(block));
        continue;
      }
      Run run = run_from_json(item, f);
      if (w.blocks.empty() || w.blocks.back().repeat != 1) {
        w.blocks.push_back({{}, 1});
      }
      w.blocks.back().runs.push_back(std::move(run));
    }
    return w;
  }

  json verdict_to_json(Verdict const& v) {
    json out = {{"answer", v.yes() ? "yes" : "no"}};
    if (v.witness) {
      out["witness"] = witness_to_json(*v.witness);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Diophantine systems
  ////////////////////////////////////////////////////////////////////////

  DiophantineSystem dioph_from_json(json const& j) {
    QMatrix               A = matrix_from_json(member(j, "A", ""), "A");
    std::set<std::size_t> forced;
    if (j.contains("forced")) {
      auto const& fj = array(j["forced"], "forced");
      for (std::size_t k = 0; k < fj.size(); ++k) {
        std::size_t idx = index_from_json(fj[k], at("forced", k));
        if (idx >= A.cols()) {
          throw InputError(at("forced", k), "index " + std::to_string(idx)
                                                + " out of range");
        }
        forced.insert(idx);
      }
    }
    return DiophantineSystem(std::move(A), std::move(forced));
  }

  json int_solution_to_json(IntSolution const& y) {
    json out = json::array();
    for (auto const& v : y) {
      out.push_back(to_string(v));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // PCP
  ////////////////////////////////////////////////////////////////////////

  PCPInstance pcp_from_json(json const& j) {
    PCPInstance inst;
    auto strings = [&](std::string const& key) {
      auto const&              v = array(member(j, key, ""), key);
      std::vector<std::string> out;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v[k].is_string()) {
          throw InputError(at(key, k), "expected a string");
        }
        out.push_back(v[k].get<std::string>());
      }
      return out;
    };
    inst.letters = strings("letters");
    inst.g       = strings("g");
    inst.h       = strings("h");
    try {
      inst.validate();
    } catch (std::invalid_argument const& e) {
      std::string msg   = e.what();
      auto        colon = msg.find(':');
      throw InputError(msg.substr(0, colon),
                       colon == std::string::npos ? msg : msg.substr(colon + 2));
    }
    return inst;
  }

  json matrix_to_json(QMatrix const& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) {
        row.push_back(m(r, c).str());
      }
      rows.push_back(row);
    }
    return rows;
  }

  json sl4_generators_to_json(std::vector<SL4Generator> const& gens) {
    json out = json::array();
    for (auto const& g : gens) {
      out.push_back({{"label", g.label}, {"matrix", matrix_to_json(g.matrix)}});
    }
    return out;
  }

  json search_result_to_json(SearchResult const& r, SearchConfig const& cfg) {
    json out;
    switch (r.status) {
      case SearchStatus::found:
        out["status"]   = "found";
        out["sequence"] = *r.sequence;
        break;
      case SearchStatus::not_found:
        out["status"] = "not_found";
        break;
      case SearchStatus::budget_exhausted:
        out["status"] = "budget_exhausted";
        break;
    }
    out["max_length"] = cfg.max_length;
    out["states"]     = r.states;
    return out;
  }

}  // namespace heisid::io
