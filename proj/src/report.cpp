#include "unico/report.hpp"

namespace unico {

bool AnalysisOutcome::consistent() const {
  bool ok = eq.consistent;
  if (cross) ok = ok && cross->agrees();
  return ok;
}

bool AnalysisOutcome::cap_reached() const {
  for (const auto& r : eq.results)
    if (r.verdict == Verdict::CapExceeded) return true;
  return false;
}

int AnalysisOutcome::exit_code() const {
  if (!consistent()) return 1;
  if (cap_reached()) return 3;
  return 0;
}

AnalysisOutcome run_analysis(const Instance& inst, const AnalysisOptions& opts) {
  AnalysisOutcome out;
  out.name = inst.name;
  out.is_space = inst.is_space();

  Frame frame = inst.realize_frame();
  out.frame_size = frame.size();
  out.labels = frame.labels();

  PropertyEngine engine(frame, opts.max_enum);
  out.eq = engine.verify_equivalences(opts.properties);

  for (const auto& r : out.eq.results)
    if (r.verdict == Verdict::Fails && !engine.replay(r)) {
      out.eq.violations.push_back(std::string("witness for ") + property_name(r.id) +
                                  " does not replay");
      out.eq.consistent = false;
    }

  if (inst.is_space()) {
    const FiniteSpace& space = *inst.space;
    out.classical_connected_flag = classical_connected(space, space.full());
    ClassicalUnicoherence cu = classical_unicoherent(space);
    out.classical_unicoherent_flag = cu.unicoherent;
    out.cross = cross_check(space, opts.max_enum);
  }
  return out;
}

ordered_json property_result_json(const PropertyResult& r) {
  if (r.verdict == Verdict::CapExceeded)
    return ordered_json{{"error", "enumeration_cap_exceeded"}};
  ordered_json j{{"holds", r.verdict == Verdict::Holds}};
  if (r.verdict == Verdict::Fails) j["witness"] = r.witness;
  return j;
}

static ordered_json flags_json(const FrameFlags& fl) {
  return ordered_json{{"connected", fl.connected},
                      {"locally_connected", fl.locally_connected},
                      {"strongly_locally_connected", fl.strongly_locally_connected},
                      {"normal", fl.normal}};
}

ordered_json analysis_to_json(const AnalysisOutcome& a) {
  ordered_json j;
  j["instance"] = a.name;
  j["kind"] = a.is_space ? "space" : "frame";
  j["elements"] = a.frame_size;
  j["labels"] = a.labels;
  j["preconditions"] = flags_json(a.eq.preconditions);
  ordered_json props;
  for (const auto& r : a.eq.results) props[property_name(r.id)] = property_result_json(r);
  j["properties"] = props;
  if (a.is_space) {
    j["classical"] = ordered_json{{"connected", *a.classical_connected_flag},
                                  {"unicoherent", *a.classical_unicoherent_flag}};
    ordered_json cc;
    cc["unicoherence_agrees"] = a.cross->unicoherence_agrees;
    cc["continua_agree"] = a.cross->continua_agree;
    cc["continua_checked"] = a.cross->continua_checked;
    if (!a.cross->first_disagreement.is_null())
      cc["disagreement"] = a.cross->first_disagreement;
    j["cross_check"] = cc;
  }
  j["consistent"] = a.consistent();
  if (!a.eq.violations.empty()) j["violations"] = a.eq.violations;
  return j;
}

std::string analysis_to_text(const AnalysisOutcome& a) {
  std::string out;
  out += "instance: " + a.name + (a.is_space ? " (space; frame of " : " (frame of ") +
         std::to_string(a.frame_size) + " elements)\n";
  const FrameFlags& fl = a.eq.preconditions;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out += std::string("preconditions: connected=") + yn(fl.connected) +
         " locally_connected=" + yn(fl.locally_connected) +
         " strongly_locally_connected=" + yn(fl.strongly_locally_connected) +
         " normal=" + yn(fl.normal) + "\n";
  out += "properties:\n";
  for (const auto& r : a.eq.results) {
    std::string line = "  ";
    line += property_name(r.id);
    while (line.size() < 7) line += ' ';
    if (r.verdict == Verdict::Holds)
      line += "holds";
    else if (r.verdict == Verdict::Fails)
      line += "fails   witness " + r.witness.dump();
    else
      line += "undecided (enumeration cap exceeded)";
    out += line + "\n";
  }
  if (a.is_space) {
    out += std::string("classical: connected=") + yn(*a.classical_connected_flag) +
           " unicoherent=" + yn(*a.classical_unicoherent_flag) + "\n";
    out += std::string("cross-check: unicoherence ") +
           (a.cross->unicoherence_agrees ? "agrees" : "DISAGREES") + ", continua " +
           (a.cross->continua_agree ? "agree" : "DISAGREE") + " (" +
           std::to_string(a.cross->continua_checked) + " closed sets)\n";
    if (!a.cross->first_disagreement.is_null())
      out += "  disagreement: " + a.cross->first_disagreement.dump() + "\n";
  }
  out += std::string("consistent: ") + yn(a.consistent()) + "\n";
  for (const auto& v : a.eq.violations) out += "  violation: " + v + "\n";
  return out;
}

}  // namespace unico
