#include "symwalk/io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace symwalk {

namespace {

bool fits_int64(const BigInt& z) {
  static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return z >= lo && z <= hi;
}

Json classes_json(const std::vector<CycleType>& classes) {
  Json out = Json::array();
  for (const auto& c : classes) out.push_back(c.to_string());
  return out;
}

}  // namespace

Json integer_to_json(const BigInt& z) {
  if (fits_int64(z)) return Json(static_cast<std::int64_t>(std::stoll(z.get_str())));
  return Json(z.get_str());
}

BigInt integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? BigInt(std::to_string(j.get<std::uint64_t>()))
                                  : BigInt(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    BigInt z;
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || z.set_str(s, 10) != 0) throw DomainError("not an integer: \"" + s + "\"");
    return z;
  }
  throw DomainError("expected an integer, got " + j.dump());
}

Json rational_to_json(const BigRational& q) {
  return Json{{"num", integer_to_json(q.get_num())}, {"den", integer_to_json(q.get_den())}};
}

BigRational rational_from_json(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("num")) throw DomainError("fraction without \"num\": " + j.dump());
    BigInt num = integer_from_json(j.at("num"));
    BigInt den = j.contains("den") ? integer_from_json(j.at("den")) : BigInt(1);
    if (den == 0) throw DomainError("zero denominator in " + j.dump());
    BigRational q(num, den);
    q.canonicalize();
    return q;
  }
  if (j.is_number_integer()) return BigRational(integer_from_json(j));
  if (j.is_string()) return parse_rational(j.get_ref<const std::string&>());
  throw DomainError("expected a fraction, got " + j.dump());
}

Json to_json(const CharacterTable& table) {
  Json partitions = Json::array();
  for (const auto& p : table.partitions()) partitions.push_back(p.to_string());
  Json chi = Json::array();
  const std::size_t cols = table.classes().size();
  for (std::size_t r = 0; r < table.partitions().size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < cols; ++c) row.push_back(integer_to_json(table.at(r, c)));
    chi.push_back(std::move(row));
  }
  Json dims = Json::array();
  for (const auto& d : table.dims()) dims.push_back(integer_to_json(d));
  return Json{{"schema", kSchemaVersion},
              {"n", table.degree()},
              {"partitions", std::move(partitions)},
              {"classes", classes_json(table.classes())},
              {"chi", std::move(chi)},
              {"dims", std::move(dims)}};
}

Json to_json(const CharPolynomial& q) {
  Json terms = Json::array();
  for (const auto& [exps, coeff] : q.terms()) {
    terms.push_back(Json{{"exps", exps},
                         {"num", integer_to_json(coeff.get_num())},
                         {"den", integer_to_json(coeff.get_den())}});
  }
  return Json{{"schema", kSchemaVersion},
              {"display", q.to_string()},
              {"terms", std::move(terms)}};
}

Json to_json(const WalkSpec& walk) {
  Json step = Json::array();
  for (const auto& entry : walk.step()) {
    step.push_back(Json{{"class", entry.cls.to_string()},
                        {"prob", rational_to_json(entry.per_element)}});
  }
  return Json{{"schema", kSchemaVersion},
              {"name", walk.name()},
              {"n", walk.degree()},
              {"p", rational_to_json(walk.hold())},
              {"step", std::move(step)}};
}

WalkSpec walk_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw DomainError("walk description must be a JSON object");
    if (!j.contains("n") || !j.at("n").is_number_integer()) {
      throw DomainError("walk description needs an integer \"n\"");
    }
    const int n = j.at("n").get<int>();
    if (n < 1) throw DomainError("walk degree must be positive");
    BigRational hold = j.contains("p") ? rational_from_json(j.at("p")) : BigRational(0);
    if (!j.contains("step") || !j.at("step").is_array()) {
      throw DomainError("walk description needs a \"step\" array");
    }
    std::vector<StepEntry> step;
    for (const auto& entry : j.at("step")) {
      if (!entry.is_object() || !entry.contains("class") || !entry.contains("prob") ||
          !entry.at("class").is_string()) {
        throw DomainError("step entries need \"class\" and \"prob\": " + entry.dump());
      }
      auto cls = CycleType::parse(entry.at("class").get<std::string>());
      step.push_back({std::move(cls), rational_from_json(entry.at("prob"))});
    }
    return WalkSpec::custom(n, std::move(step), std::move(hold));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed walk description: ") + e.what());
  } catch (const std::invalid_argument& e) {
    // Covers CycleType::parse failures that are not DomainErrors already.
    if (dynamic_cast<const DomainError*>(&e) == nullptr &&
        dynamic_cast<const UnsupportedError*>(&e) == nullptr) {
      throw DomainError(std::string("malformed walk description: ") + e.what());
    }
    throw;
  }
}

WalkSpec parse_walk_descriptor(std::string_view descriptor, int n) {
  auto prefix = [&](std::string_view p) { return descriptor.substr(0, p.size()) == p; };
  if (descriptor == "transposition") return builtin_walk(WalkKind::Transposition, n);
  if (descriptor == "three-cycle") return builtin_walk(WalkKind::ThreeCycle, n);
  if (descriptor == "n-cycle") return builtin_walk(WalkKind::NCycle, n);
  if (prefix("lazy:")) {
    return builtin_walk(WalkKind::LazyTransposition, n,
                        parse_rational(descriptor.substr(5)));
  }
  if (prefix("custom:")) {
    std::string path(descriptor.substr(7));
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read walk file " + path);
    Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw DomainError("walk file " + path + " is not valid JSON");
    WalkSpec walk = walk_from_json(j);
    if (walk.degree() != n) {
      throw DomainError("walk file " + path + " is for n = " +
                        std::to_string(walk.degree()) + ", not " + std::to_string(n));
    }
    return walk;
  }
  throw DomainError("unknown walk \"" + std::string(descriptor) +
                    "\" (expected transposition, lazy:<p>, three-cycle, n-cycle or "
                    "custom:<path>)");
}

Json to_json(const ClassDistribution& d, bool approx) {
  Json rows = Json::array();
  for (std::size_t k = 0; k < d.classes.size(); ++k) {
    const auto& c = d.classes[k];
    Json row{{"class", c.to_string()},
             {"prob", rational_to_json(d.probs[k])},
             {"class_size", integer_to_json(c.class_size())},
             {"sign", c.sign()}};
    if (approx) row["approx"] = approximate(d.probs[k]);
    rows.push_back(std::move(row));
  }
  return Json{{"schema", kSchemaVersion},
              {"n", d.n},
              {"t", d.t},
              {"walk", d.walk},
              {"rows", std::move(rows)}};
}

Json to_json(const StabilizationReport& report) {
  Json pairs = Json::array();
  for (const auto& cert : report.certificates) {
    Json lead = Json::array();
    for (const auto& p : cert.lead) lead.push_back(p.to_string());
    Json row{{"alpha", cert.alpha.to_string()},
             {"beta", cert.beta.to_string()},
             {"i", cert.i},
             {"t_star", cert.t_star ? Json(*cert.t_star) : Json(nullptr)},
             {"sign", cert.eventual_sign},
             {"certified", cert.certified},
             {"lead", std::move(lead)},
             {"lead_magnitude", rational_to_json(cert.lead_magnitude)},
             {"next_magnitude", rational_to_json(cert.next_magnitude)}};
    if (!cert.certified) row["reason"] = cert.reason;
    pairs.push_back(std::move(row));
  }
  Json uncertified = Json::array();
  for (const auto& [a, b] : report.uncertified) {
    uncertified.push_back(Json::array({a.to_string(), b.to_string()}));
  }
  return Json{{"schema", kSchemaVersion},
              {"parity", to_string(report.parity)},
              {"pairs", std::move(pairs)},
              {"t_max", report.t_max},
              {"order", classes_json(report.order)},
              {"uncertified", std::move(uncertified)},
              {"consistent", report.consistent}};
}

Json to_json(const RankReport& report) {
  Json groups = Json::array();
  for (std::size_t g = 0; g < report.groups.size(); ++g) {
    groups.push_back(Json{{"prob", rational_to_json(report.group_probs[g])},
                          {"classes", classes_json(report.groups[g])}});
  }
  const char* parity = report.restricted_parity == ClassParity::Even  ? "even"
                       : report.restricted_parity == ClassParity::Odd ? "odd"
                                                                      : "any";
  return Json{{"schema", kSchemaVersion},
              {"t", report.t},
              {"restricted_parity", parity},
              {"groups", std::move(groups)}};
}

Json to_json(const StationarySplit& split) {
  return Json{{"schema", kSchemaVersion},
              {"t", split.t},
              {"above", classes_json(split.above)},
              {"equal", classes_json(split.equal)},
              {"below", classes_json(split.below)}};
}

void write_csv(std::ostream& out, const CharacterTable& table) {
  out << "partition";
  for (const auto& c : table.classes()) out << ',' << c.to_string();
  out << '\n';
  for (std::size_t r = 0; r < table.partitions().size(); ++r) {
    // Partition text contains commas, so it is quoted.
    out << '"' << table.partitions()[r].to_string() << '"';
    for (std::size_t c = 0; c < table.classes().size(); ++c) out << ',' << table.at(r, c);
    out << '\n';
  }
}

void write_csv(std::ostream& out, const ClassDistribution& d, bool approx) {
  out << "class,per_element_num,per_element_den,class_size,sign";
  if (approx) out << ",approx";
  out << '\n';
  for (std::size_t k = 0; k < d.classes.size(); ++k) {
    const auto& c = d.classes[k];
    out << c.to_string() << ',' << d.probs[k].get_num() << ',' << d.probs[k].get_den()
        << ',' << c.class_size() << ',' << c.sign();
    if (approx) out << ',' << approximate(d.probs[k]);
    out << '\n';
  }
}

void write_distance_header(std::ostream& out, bool approx) {
  out << "t,tv_num,tv_den,sep_num,sep_den,linf_num,linf_den";
  if (approx) out << ",tv_approx,sep_approx,linf_approx";
  out << '\n';
}

void write_csv(std::ostream& out, const DistanceRow& row, bool approx) {
  out << row.t << ',' << row.tv.get_num() << ',' << row.tv.get_den() << ','
      << row.sep.get_num() << ',' << row.sep.get_den() << ',' << row.linf.get_num()
      << ',' << row.linf.get_den();
  if (approx) {
    out << ',' << approximate(row.tv) << ',' << approximate(row.sep) << ','
        << approximate(row.linf);
  }
  out << '\n';
}

}  // namespace symwalk
