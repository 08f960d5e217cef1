#include "sievelab/serialization.hpp"

#include <nlohmann/json.hpp>

namespace sievelab {

using nlohmann::json;

json to_json(const SieveSystem& sys) {
  json places = json::array();
  for (const auto& pl : sys.places) {
    json density = json::array();
    for (const auto& nu : pl.density) density.push_back(rat_to_string(nu));
    json omega = json::array();
    for (int y = 0; y < pl.size; ++y)
      if (pl.in_omega[y]) omega.push_back(y);
    places.push_back({{"label", pl.label}, {"size", pl.size},
                      {"density", density}, {"omega", omega}});
  }
  return json{{"places", places}};
}

json to_json(const SiftableSample& sample) {
  json items = json::array();
  for (const auto& it : sample.items)
    items.push_back({{"weight", rat_to_string(it.weight)}, {"values", it.values}});
  return json{{"items", items}};
}

json to_json(const GramDelta& gram) {
  json index = json::array();
  for (const auto& e : gram.index)
    index.push_back({{"places", e.places}, {"fns", e.fns}});
  json matrix = json::array();
  for (Eigen::Index r = 0; r < gram.matrix.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < gram.matrix.cols(); ++c)
      row.push_back({gram.matrix(r, c).real(), gram.matrix(r, c).imag()});
    matrix.push_back(row);
  }
  return json{{"index", index},
              {"matrix", matrix},
              {"top_eigenvalue", gram.top_eigenvalue},
              {"min_eigenvalue", gram.min_eigenvalue}};
}

SieveSystem system_from_json(const json& j) {
  SieveSystem sys;
  for (const auto& pj : j.at("places")) {
    SievePlace pl;
    pl.label = pj.at("label").get<long long>();
    pl.size = pj.at("size").get<int>();
    for (const auto& d : pj.at("density"))
      pl.density.push_back(rat_from_string(d.get<std::string>()));
    pl.in_omega.assign(pl.size, 0);
    for (const auto& y : pj.at("omega")) pl.in_omega.at(y.get<int>()) = 1;
    sys.places.push_back(std::move(pl));
  }
  sys.validate();
  return sys;
}

SiftableSample sample_from_json(const json& j) {
  SiftableSample sample;
  for (const auto& ij : j.at("items")) {
    SiftableSample::Item it;
    it.weight = rat_from_string(ij.at("weight").get<std::string>());
    for (const auto& v : ij.at("values")) it.values.push_back(v.get<int>());
    sample.items.push_back(std::move(it));
  }
  return sample;
}

GramDelta gram_from_json(const json& j) {
  GramDelta gram;
  for (const auto& ej : j.at("index")) {
    GramIndexEntry e;
    for (const auto& p : ej.at("places")) e.places.push_back(p.get<int>());
    for (const auto& f : ej.at("fns")) e.fns.push_back(f.get<int>());
    gram.index.push_back(std::move(e));
  }
  const auto& mj = j.at("matrix");
  size_t n = mj.size();
  gram.matrix.resize((Eigen::Index)n, (Eigen::Index)n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) {
      const auto& cell = mj.at(r).at(c);
      gram.matrix((Eigen::Index)r, (Eigen::Index)c) =
          cd(cell.at(0).get<double>(), cell.at(1).get<double>());
    }
  gram.top_eigenvalue = j.at("top_eigenvalue").get<double>();
  gram.min_eigenvalue = j.at("min_eigenvalue").get<double>();
  return gram;
}

}  // namespace sievelab
