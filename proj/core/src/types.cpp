#include "ordfuse/types.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "ordfuse/error.hpp"

namespace ordfuse {

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InputError("frame must contain at least one element");
  if (labels_.size() > kMaxFrameSize) {
    throw InputError("frame has " + std::to_string(labels_.size()) +
                     " elements; at most " + std::to_string(kMaxFrameSize) +
                     " are supported");
  }
  std::set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw InputError("frame element labels must be non-empty");
    if (!seen.insert(label).second) {
      throw InputError("duplicate frame element '" + label + "'");
    }
  }
}

std::optional<std::size_t> Frame::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Proposition Frame::universe() const {
  if (labels_.size() == kMaxFrameSize) return Proposition::from_bits(~std::uint64_t{0});
  return Proposition::from_bits((std::uint64_t{1} << labels_.size()) - 1);
}

namespace {

template <typename Range>
Proposition build(const Frame& frame, const Range& members) {
  Proposition p;
  for (const auto& name : members) {
    auto index = frame.index_of(name);
    if (!index) throw InputError("unknown element label '" + std::string(name) + "'");
    p = p | Proposition::singleton(*index);
  }
  if (p.empty()) throw InputError("a proposition needs at least one element");
  return p;
}

}  // namespace

Proposition Frame::proposition(std::span<const std::string> members) const {
  return build(*this, members);
}

Proposition Frame::proposition(std::initializer_list<std::string_view> members) const {
  return build(*this, members);
}

std::vector<std::string> Frame::members(Proposition p) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (p.contains(Proposition::singleton(i))) out.push_back(labels_[i]);
  }
  return out;
}

std::string Frame::format(Proposition p) const {
  std::string out = "{";
  bool first = true;
  for (const auto& label : members(p)) {
    if (!first) out += ',';
    out += label;
    first = false;
  }
  return out + "}";
}

MassFunction MassFunction::checked(Frame frame, Map masses) {
  MassFunction m(std::move(frame), std::move(masses));
  if (auto report = validate_bpa(m); !report) {
    std::string what = "invalid mass function:";
    for (const auto& v : report.violations) what += " " + v + ";";
    what.pop_back();
    throw InputError(what);
  }
  return m;
}

MassFunction MassFunction::from_labels(
    const Frame& frame,
    std::initializer_list<std::pair<std::initializer_list<std::string_view>, double>>
        entries) {
  Map masses;
  for (const auto& [members, mass] : entries) {
    masses[frame.proposition(members)] += mass;
  }
  return MassFunction(frame, std::move(masses));
}

double MassFunction::mass(Proposition p) const {
  auto it = masses_.find(p);
  return it == masses_.end() ? 0.0 : it->second;
}

double MassFunction::total() const {
  double sum = 0.0;
  for (const auto& [p, m] : masses_) sum += m;
  return sum;
}

std::vector<std::pair<Proposition, double>> MassFunction::focal_elements() const {
  std::vector<std::pair<Proposition, double>> out;
  for (const auto& [p, m] : masses_) {
    if (m > 0.0) out.emplace_back(p, m);
  }
  return out;
}

std::size_t MassFunction::focal_count() const {
  return static_cast<std::size_t>(std::count_if(
      masses_.begin(), masses_.end(), [](const auto& kv) { return kv.second > 0.0; }));
}

BpaReport validate_bpa(const MassFunction& m, double tolerance) {
  BpaReport report;
  const Frame& frame = m.frame();
  for (const auto& [p, mass] : m) {
    const std::string name = p.empty() ? std::string("{}") : frame.format(p);
    if (p.empty()) report.violations.push_back("empty set carries an entry");
    if (!frame.covers(p)) {
      report.violations.push_back("proposition outside the frame (mask " +
                                  std::to_string(p.bits()) + ")");
    }
    if (!std::isfinite(mass)) {
      report.violations.push_back("mass of " + name + " is not finite");
    } else if (mass < 0.0) {
      report.violations.push_back("mass of " + name + " is negative");
    } else if (mass > 1.0 + tolerance) {
      report.violations.push_back("mass of " + name + " exceeds 1");
    }
  }
  const double sum = m.total();
  if (!(std::abs(sum - 1.0) <= tolerance)) {
    std::ostringstream os;
    os.precision(17);
    os << "masses sum to " << sum << ", expected 1";
    report.violations.push_back(os.str());
  }
  return report;
}

std::optional<std::size_t> OrdinalEvidence::position_of(Proposition p) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].proposition == p) return i;
  }
  return std::nullopt;
}

MassFunction bpa_from_ordinal(const OrdinalEvidence& e) {
  MassFunction::Map masses;
  for (const auto& entry : e.entries()) {
    if (!masses.emplace(entry.proposition, entry.mass).second) {
      throw InputError("duplicate proposition " + e.frame().format(entry.proposition) +
                       " in ordinal evidence");
    }
  }
  return MassFunction(e.frame(), std::move(masses));
}

EvidenceSet::EvidenceSet(Frame frame, std::vector<OrdinalEvidence> evidences)
    : frame_(std::move(frame)), evidences_(std::move(evidences)) {
  if (evidences_.empty()) throw InputError("evidence set is empty");

  for (std::size_t i = 0; i < evidences_.size(); ++i) {
    const auto& e = evidences_[i];
    const std::string where = "evidence " + std::to_string(i + 1) + ": ";
    if (e.frame() != frame_) throw InputError(where + "frame differs from the set's frame");
    if (e.size() == 0) throw InputError(where + "no entries");

    MassFunction m = [&] {
      try {
        return bpa_from_ordinal(e);
      } catch (const InputError& err) {
        throw InputError(where + err.what());
      }
    }();
    if (auto report = validate_bpa(m); !report) {
      throw InputError(where + report.violations.front());
    }

    std::vector<Proposition> props;
    for (const auto& [p, mass] : m) props.push_back(p);
    if (i == 0) {
      propositions_ = std::move(props);
    } else if (props != propositions_) {
      throw InputError(where + "proposition set differs from evidence 1");
    }
  }
}

std::vector<MassFunction> EvidenceSet::bpas() const {
  std::vector<MassFunction> out;
  out.reserve(evidences_.size());
  for (const auto& e : evidences_) out.push_back(bpa_from_ordinal(e));
  return out;
}

}  // namespace ordfuse
