#include <cmath>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "microregion/boost.hpp"
#include "microregion/error.hpp"
#include "util/io.hpp"

namespace microregion::boosting {
namespace {

using Json = nlohmann::ordered_json;

Json tree_to_json(const RegressionTree& t, int id) {
  const auto& n = t.nodes.at(static_cast<std::size_t>(id));
  Json j;
  if (n.feature < 0) {
    j["leaf"] = n.value;
    return j;
  }
  j["feature"] = n.feature;
  j["threshold"] = n.threshold;
  j["gain"] = n.gain;
  j["left"] = tree_to_json(t, n.left);
  j["right"] = tree_to_json(t, n.right);
  return j;
}

double finite_number(const Json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number()) throw SchemaError(std::string("model field '") + key + "' is not a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw SchemaError(std::string("model field '") + key + "' is not finite");
  return d;
}

int tree_from_json(const Json& j, std::size_t n_features, int depth, RegressionTree& t) {
  const int id = static_cast<int>(t.nodes.size());
  t.nodes.emplace_back();
  t.max_depth = std::max(t.max_depth, depth);
  if (j.contains("leaf")) {
    t.nodes.back().value = finite_number(j, "leaf");
    return id;
  }
  const auto& f = j.at("feature");
  if (!f.is_number_integer() || f.get<long long>() < 0 ||
      static_cast<std::size_t>(f.get<long long>()) >= n_features) {
    throw SchemaError("tree split references an invalid feature index");
  }
  TreeNode node;
  node.feature = f.get<int>();
  node.threshold = finite_number(j, "threshold");
  node.gain = j.contains("gain") ? finite_number(j, "gain") : 0.0;
  node.left = tree_from_json(j.at("left"), n_features, depth + 1, t);
  node.right = tree_from_json(j.at("right"), n_features, depth + 1, t);
  t.nodes[static_cast<std::size_t>(id)] = node;
  return id;
}

RegressionTree read_tree(const Json& j, std::size_t n_features) {
  RegressionTree t;
  tree_from_json(j, n_features, 0, t);
  return t;
}

}  // namespace

void write_model(std::ostream& out, const BoostModel& model) {
  Json j;
  j["init"] = {{"mu", model.init.mu}, {"log_sigma", model.init.log_sigma}};
  j["learning_rate"] = model.learning_rate;
  j["feature_names"] = model.feature_names;
  Json stages = Json::array();
  for (const auto& s : model.stages) {
    Json js;
    js["scaling"] = s.scaling;
    js["tree_mu"] = tree_to_json(s.tree_mu, 0);
    js["tree_logsigma"] = tree_to_json(s.tree_log_sigma, 0);
    stages.push_back(std::move(js));
  }
  j["stages"] = std::move(stages);
  out << j.dump(1) << '\n';
  if (!out) throw IoError("write error on model output");
}

BoostModel read_model(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("model file: ") + e.what());
  }
  try {
    BoostModel m;
    m.init.mu = finite_number(j.at("init"), "mu");
    m.init.log_sigma = finite_number(j.at("init"), "log_sigma");
    m.learning_rate = finite_number(j, "learning_rate");
    if (!(m.learning_rate > 0.0)) throw SchemaError("model learning_rate must be positive");
    m.feature_names = j.at("feature_names").get<std::vector<std::string>>();
    for (const auto& js : j.at("stages")) {
      Stage s;
      s.scaling = finite_number(js, "scaling");
      if (!(s.scaling > 0.0)) throw SchemaError("stage scaling must be positive");
      s.tree_mu = read_tree(js.at("tree_mu"), m.feature_names.size());
      s.tree_log_sigma = read_tree(js.at("tree_logsigma"), m.feature_names.size());
      m.stages.push_back(std::move(s));
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("model file: ") + e.what());
  }
}

void save_model(const std::filesystem::path& path, const BoostModel& model) {
  auto out = util::open_output(path);
  write_model(out, model);
}

BoostModel load_model(const std::filesystem::path& path) {
  auto in = util::open_input(path);
  return read_model(in);
}

}  // namespace microregion::boosting
