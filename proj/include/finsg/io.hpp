#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "finsg/dfa.hpp"
#include "finsg/green.hpp"
#include "finsg/order.hpp"
#include "finsg/semigroup.hpp"

// JSON encodings. All readers throw finsg::Error with ErrorKind::invalid_input
// on malformed documents, or the validation error of the decoded object.
namespace finsg::io {

  using json = nlohmann::json;

  //! Parses a file, or standard input for "-".
  json read_json(std::string const& path);
  json parse_json(std::string const& text);

  //! {"elements", "table", "generators"?, "identity"?, "order"?}
  json            to_json(FiniteSemigroup const& S);
  json            to_json(OrderedSemigroup const& S);
  FiniteSemigroup semigroup_from_json(json const& j);
  //! The "order" field as a validated order; the trivial order when absent.
  OrderedSemigroup ordered_from_json(json const& j);

  //! {"a", "b", "group", "sandwich"}
  json                to_json(ReesMatrixSemigroup const& R);
  ReesMatrixSemigroup rees_from_json(json const& j);

  //! {"states", "alphabet", "transitions": {"q,a": "q'"}, "initial",
  //! "accepting"}
  json to_json(Dfa const& d);
  Dfa  dfa_from_json(json const& j);

  //! A total map between element sets given as {"label": "label", ...}.
  std::vector<Element> map_from_json(json const&            j,
                                     FiniteSemigroup const& from,
                                     FiniteSemigroup const& to);

  //! Labels of the elements, as a JSON array.
  json labels(FiniteSemigroup const& S, std::vector<Element> const& xs);

}  // namespace finsg::io
