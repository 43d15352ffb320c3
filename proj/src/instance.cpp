#include "unico/instance.hpp"

#include <fstream>

#include "unico/errors.hpp"

namespace unico {

using nlohmann::json;

Frame Instance::realize_frame() const {
  if (frame) return *frame;
  return frame_of_opens(*space).frame;
}

namespace {

json expect(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(key, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Frame frame_from_json(const json& j) {
  int n = expect(j, "n").get<int>();
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : expect(j, "leq")) {
    if (!p.is_array() || p.size() != 2)
      throw ParseError("leq", "each entry must be a pair [i, j]");
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return Frame::build(n, pairs, std::move(labels));
}

FiniteSpace space_from_json(const json& j) {
  std::vector<std::string> points = expect(j, "points").get<std::vector<std::string>>();
  std::vector<Bitset> opens;
  for (const auto& o : expect(j, "opens")) {
    Bitset b(int(points.size()));
    for (const auto& entry : o) {
      int idx;
      if (entry.is_string()) {
        std::string label = entry.get<std::string>();
        idx = -1;
        for (int i = 0; i < int(points.size()); ++i)
          if (points[i] == label) idx = i;
        if (idx < 0) throw ParseError("opens", "unknown point label \"" + label + "\"");
      } else {
        idx = entry.get<int>();
        if (idx < 0 || idx >= int(points.size()))
          throw ParseError("opens", "point index " + std::to_string(idx) + " out of range");
      }
      b.set(idx);
    }
    opens.push_back(std::move(b));
  }
  return validate_space(std::move(points), std::move(opens));
}

}  // namespace

Instance instance_from_json(const json& j, const std::string& fallback_name) {
  Instance inst;
  inst.name = j.contains("name") ? j.at("name").get<std::string>() : fallback_name;
  std::string kind = expect(j, "kind").get<std::string>();
  if (kind == "frame")
    inst.frame = frame_from_json(j);
  else if (kind == "space")
    inst.space = space_from_json(j);
  else
    throw ParseError("kind", "kind must be \"frame\" or \"space\", got \"" + kind + "\"");
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ":byte " + std::to_string(e.byte), e.what());
  }
  try {
    return instance_from_json(j, path.stem().string());
  } catch (const json::exception& e) {
    throw ParseError(path.string(), e.what());
  }
}

nlohmann::ordered_json instance_to_json(const Instance& inst) {
  nlohmann::ordered_json j;
  if (inst.frame) {
    const Frame& f = *inst.frame;
    j["kind"] = "frame";
    j["name"] = inst.name;
    j["n"] = f.size();
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (int a = 0; a < f.size(); ++a)
      for (int b = 0; b < f.size(); ++b)
        if (a != b && f.leq(a, b)) pairs.push_back({a, b});
    j["leq"] = pairs;
    j["labels"] = f.labels();
  } else {
    const FiniteSpace& s = *inst.space;
    j["kind"] = "space";
    j["name"] = inst.name;
    j["points"] = s.points;
    nlohmann::ordered_json opens = nlohmann::ordered_json::array();
    for (const auto& o : s.opens) {
      nlohmann::ordered_json one = nlohmann::ordered_json::array();
      o.for_each([&](int i) { one.push_back(s.points[i]); });
      opens.push_back(one);
    }
    j["opens"] = opens;
  }
  return j;
}

}  // namespace unico
