#include "finsg/report.hpp"

#include "finsg/green.hpp"
#include "finsg/hull.hpp"
#include "finsg/order.hpp"
#include "finsg/terms.hpp"

namespace finsg {

  io::json analyze(FiniteSemigroup const& S, ReportOptions const& options) {
    io::json r;
    r["input"]       = options.input;
    r["size"]        = S.size();
    r["idempotents"] = S.idempotents().size();
    r["monoid"]      = S.identity().has_value();

    auto const G = green_structure(S);
    std::size_t regular = 0;
    for (bool b : G.regular) {
      regular += b ? 1 : 0;
    }
    r["green"] = {{"r_classes", G.r_count},
                  {"l_classes", G.l_count},
                  {"h_classes", G.h_count},
                  {"j_classes", G.j_count},
                  {"regular_j_classes", regular}};

    auto const K  = kernel(S);
    auto const KS = induced_subsemigroup(S, K);
    auto const RC = rees_coordinatize(KS);
    r["kernel"] = {{"size", K.size()},
                   {"elements", io::labels(S, K)},
                   {"rows", RC.rees.a_size},
                   {"columns", RC.rees.b_size},
                   {"group_order", RC.rees.group.size()},
                   {"sandwich", RC.rees.sandwich}};
    r["completely_simple"] = K.size() == S.size();

    auto const c = classify(S);
    r["classification"] = {{"lm", c.lm}, {"rm", c.rm}, {"ggm", c.ggm}, {"wggm", c.wggm}};

    auto const t = torsion_checks(KS);
    r["kernel_torsion"] = {{"has_torsion", t.has_torsion},
                           {"full_torsion", t.full_torsion},
                           {"plenty_left", t.plenty_left},
                           {"plenty_right", t.plenty_right}};

    auto const red = reductivity(S);
    r["reductivity"] = {{"left_reductive", red.left_reductive},
                        {"right_reductive", red.right_reductive},
                        {"weakly_reductive", red.weakly_reductive}};

    auto const o = is_orderable(S, options.jobs);
    io::json   order = {{"orderable", o.orderable}};
    if (o.witness) {
      io::json pairs = io::json::array();
      for (auto [s, u] : o.witness->strict_pairs()) {
        pairs.push_back({S.label(s), S.label(u)});
      }
      order["witness"] = pairs;
    }
    auto const u = unorderability_report(S, options.jobs);
    order["kernel_group_nontrivial"] = u.kernel_group_nontrivial;
    order["consistent"]              = u.consistent;
    r["orderability"]                = order;

    if (!options.pseudovarieties.empty()) {
      std::vector<std::string> names;
      for (auto const& name : options.pseudovarieties) {
        if (name == "all") {
          auto const& all = pseudovariety_names();
          names.insert(names.end(), all.begin(), all.end());
        } else {
          names.push_back(name);
        }
      }
      io::json pv = io::json::object();
      for (auto const& name : names) {
        pv[name] = pseudovariety_membership(S, name, options.jobs).holds;
      }
      r["pseudovarieties"] = pv;
    }
    return r;
  }

  namespace {
    void flatten(io::json const& j, std::string const& path, std::string& out) {
      if (j.is_object()) {
        for (auto const& [k, v] : j.items()) {
          flatten(v, path.empty() ? k : path + "." + k, out);
        }
        return;
      }
      out += path + "=" + (j.is_string() ? j.get<std::string>() : j.dump())
             + "\n";
    }
  }  // namespace

  std::string flatten_text(io::json const& j) {
    std::string out;
    flatten(j, "", out);
    return out;
  }

}  // namespace finsg
