#include "halftwist/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "halftwist/errors.hpp"

namespace halftwist {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("malformed JSON");
  return j;
}

long get_integer(const json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw input_error("missing or non-integer field '" + key + "'");
  return j.at(key).get<long>();
}

void reject_unknown_keys(const json& j,
                         std::initializer_list<const char*> known) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known)
      if (it.key() == k) ok = true;
    if (!ok) throw input_error("unknown field '" + it.key() + "'");
  }
}

}  // namespace

std::string table_to_text(const HodgeTable& t) {
  json j;
  j["half_degree"] = t.field().half_degree;
  j["cm_type"] = t.cm_type().chosen();
  j["weight"] = t.weight();
  json entries = json::array();
  for (const auto& [key, dim] : t.entries())
    entries.push_back({{"dim", dim},
                       {"embedding", key.embedding},
                       {"p", key.p},
                       {"q", key.q}});
  j["entries"] = entries;
  return j.dump(2) + "\n";
}

HodgeTable table_from_text(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw input_error("table file must hold a JSON object");
  reject_unknown_keys(j, {"half_degree", "cm_type", "weight", "entries"});
  long r = get_integer(j, "half_degree");
  if (r < 1 || r > 64) throw input_error("half_degree out of range");
  if (!j.contains("cm_type") || !j.at("cm_type").is_array())
    throw input_error("missing cm_type list");
  std::vector<int> chosen;
  for (const json& e : j.at("cm_type")) {
    if (!e.is_number_integer()) throw input_error("cm_type entries must be integers");
    chosen.push_back(e.get<int>());
  }
  int weight = static_cast<int>(get_integer(j, "weight"));
  std::vector<TableEntry> entries;
  if (j.contains("entries")) {
    if (!j.at("entries").is_array())
      throw input_error("entries must be a list");
    for (const json& e : j.at("entries")) {
      if (!e.is_object()) throw input_error("entries must be objects");
      reject_unknown_keys(e, {"embedding", "p", "q", "dim"});
      entries.push_back({static_cast<int>(get_integer(e, "embedding")),
                         static_cast<int>(get_integer(e, "p")),
                         static_cast<int>(get_integer(e, "q")),
                         get_integer(e, "dim")});
    }
  }
  CMType cm_type(CMFieldDescriptor{static_cast<int>(r)}, std::move(chosen));
  return HodgeTable(std::move(cm_type), weight, entries);
}

std::string form_to_text(const QuadFormDiag& f) {
  json j;
  j["d"] = f.d;
  json diag = json::array();
  for (const Rat& e : f.diag) diag.push_back(rational_str(e));
  j["diag"] = diag;
  return j.dump(2) + "\n";
}

QuadFormDiag form_from_text(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw input_error("form file must hold a JSON object");
  reject_unknown_keys(j, {"d", "diag"});
  long d = get_integer(j, "d");
  if (!j.contains("diag") || !j.at("diag").is_array())
    throw input_error("missing diag list");
  std::vector<Rat> diag;
  for (const json& e : j.at("diag")) {
    if (!e.is_string())
      throw input_error("diag entries must be rationals as strings");
    diag.push_back(parse_rational(e.get<std::string>()));
  }
  return QuadFormDiag(d, std::move(diag));
}

std::string period_to_text(const PeriodVector& p) {
  json j = json::array();
  char buf[64];
  for (const Cplx& c : p.v) {
    std::snprintf(buf, sizeof buf, "%.17g", c.real());
    std::string re = buf;
    std::snprintf(buf, sizeof buf, "%.17g", c.imag());
    j.push_back({re, std::string(buf)});
  }
  return j.dump(2) + "\n";
}

PeriodVector period_from_text(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_array()) throw input_error("period file must hold a JSON list");
  PeriodVector out;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
        !e[1].is_string())
      throw input_error("period entries must be [re, im] string pairs");
    try {
      out.v.emplace_back(std::stod(e[0].get<std::string>()),
                         std::stod(e[1].get<std::string>()));
    } catch (const std::exception&) {
      throw input_error("malformed decimal in period entry");
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << content;
  if (!out.good()) throw input_error("write failed for '" + path + "'");
}

}  // namespace halftwist
