#ifndef MAJORIZATION_IO_HPP_INCLUDED
#define MAJORIZATION_IO_HPP_INCLUDED

// JSON carriers for vectors and matrices. Scalars are JSON integers,
// "p/q" strings, or (with a warning) binary64 numbers converted exactly.

#include "majorization/isotone.hpp"
#include "majorization/numerics.hpp"

#include "json.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace majorization::io {

using json = nlohmann::ordered_json;

inline Rational scalar_from_json(const json& j, std::vector<std::string>& warnings)
{
   if (j.is_number_integer()) {
      if (j.is_number_unsigned()) {
         return Rational(mpz_class(std::to_string(j.get<std::uint64_t>())));
      }
      return Rational(mpz_class(std::to_string(j.get<std::int64_t>())));
   }
   if (j.is_number_float()) {
      const double d = j.get<double>();
      auto r = rational_from_double(d);
      warnings.push_back("binary64 value " + j.dump() + " read exactly as " + to_string(r));
      return r;
   }
   if (j.is_string()) {
      return parse_rational(j.get<std::string>());
   }
   throw parse_error("scalar must be an integer, a number or a \"p/q\" string");
}

inline json scalar_to_json(const Rational& r)
{
   if (is_integer(r) && r.get_num().fits_slong_p()) {
      return json(static_cast<std::int64_t>(r.get_num().get_si()));
   }
   return json(to_string(r));
}

inline Vec vector_from_json(const json& j, std::vector<std::string>& warnings)
{
   if (!j.is_array() || j.empty()) {
      throw parse_error("vector must be a non-empty JSON array");
   }
   std::vector<Rational> entries;
   for (const auto& e : j) {
      entries.push_back(scalar_from_json(e, warnings));
   }
   return Vec(std::move(entries));
}

inline Mat matrix_from_json(const json& j, std::vector<std::string>& warnings)
{
   if (!j.is_array() || j.empty()) {
      throw parse_error("matrix must be a non-empty JSON array of rows");
   }
   std::vector<std::vector<Rational>> rows;
   for (const auto& row : j) {
      if (!row.is_array() || row.empty()) {
         throw parse_error("matrix rows must be non-empty JSON arrays");
      }
      std::vector<Rational> r;
      for (const auto& e : row) {
         r.push_back(scalar_from_json(e, warnings));
      }
      if (!rows.empty() && r.size() != rows.front().size()) {
         throw parse_error("matrix rows have different lengths");
      }
      rows.push_back(std::move(r));
   }
   return Mat::from_rows(rows);
}

inline json to_json(const Vec& v)
{
   json out = json::array();
   for (const auto& e : v) {
      out.push_back(scalar_to_json(e));
   }
   return out;
}

inline json to_json(const Mat& m)
{
   json out = json::array();
   for (std::size_t i = 0; i < m.rows(); ++i) {
      out.push_back(to_json(m.row(i)));
   }
   return out;
}

inline json to_json(const Perm& p)
{
   json out = json::array();
   for (std::size_t v : p.image()) {
      out.push_back(v);
   }
   return out;
}

inline Perm perm_from_json(const json& j)
{
   if (!j.is_array()) {
      throw parse_error("permutation must be an array of indices");
   }
   std::vector<std::size_t> image;
   for (const auto& e : j) {
      if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<std::int64_t>() >= 0)) {
         throw parse_error("permutation entries must be non-negative integers");
      }
      image.push_back(e.get<std::size_t>());
   }
   return Perm(std::move(image));
}

inline json to_json(const Witness& w)
{
   struct visitor {
      json operator()(std::monostate) const { return nullptr; }
      json operator()(const PermWitness& w) const
         {
            return json{{"kind", "perm"}, {"p", to_json(w.p)}};
         }
      json operator()(const PairWitness& w) const
         {
            return json{{"kind", "pair"}, {"p", to_json(w.p)}, {"q", to_json(w.q)}};
         }
      json operator()(const SampleWitness& w) const
         {
            return json{{"kind", "sample"}, {"p", to_json(w.p)}, {"y", to_json(w.y)}};
         }
      json operator()(const LeftHalfWitness& w) const
         {
            return json{{"kind", "left_half"}, {"q", to_json(w.q)}};
         }
      json operator()(const RightHalfWitness& w) const
         {
            return json{{"kind", "right_half"}, {"y", to_json(w.y)}};
         }
      json operator()(const GlobalWitness& w) const
         {
            return json{{"kind", "global"}, {"y", to_json(w.y)}, {"q", to_json(w.q)}};
         }
      json operator()(const ColumnPairWitness& w) const
         {
            return json{{"kind", "columns"}, {"s", w.s}, {"t", w.t}};
         }
   };
   return std::visit(visitor{}, w);
}

inline Witness witness_from_json(const json& j)
{
   if (j.is_null()) {
      return std::monostate{};
   }
   std::vector<std::string> ignored;
   const auto kind = j.at("kind").get<std::string>();
   if (kind == "perm") {
      return PermWitness{perm_from_json(j.at("p"))};
   }
   if (kind == "pair") {
      return PairWitness{perm_from_json(j.at("p")), perm_from_json(j.at("q"))};
   }
   if (kind == "sample") {
      return SampleWitness{perm_from_json(j.at("p")), vector_from_json(j.at("y"), ignored)};
   }
   if (kind == "left_half") {
      return LeftHalfWitness{perm_from_json(j.at("q"))};
   }
   if (kind == "right_half") {
      return RightHalfWitness{vector_from_json(j.at("y"), ignored)};
   }
   if (kind == "global") {
      return GlobalWitness{vector_from_json(j.at("y"), ignored), perm_from_json(j.at("q"))};
   }
   if (kind == "columns") {
      return ColumnPairWitness{j.at("s").get<std::size_t>(), j.at("t").get<std::size_t>()};
   }
   throw parse_error("unknown witness kind '" + kind + "'");
}

inline json to_json(const AndoForm& form)
{
   if (const auto* tm = std::get_if<TraceMap>(&form)) {
      return json{{"form", "TraceMap"}, {"a", to_json(tm->a)}};
   }
   if (const auto* ps = std::get_if<PermScaled>(&form)) {
      return json{{"form", "PermScaled"},
                  {"alpha", scalar_to_json(ps->alpha)},
                  {"beta", scalar_to_json(ps->beta)},
                  {"perm", to_json(ps->perm)}};
   }
   return json{{"form", "NotIsotone"}};
}

inline json to_json(const IsotoneVerdict& v)
{
   json out{{"holds", v.holds}, {"sampled", v.sampled}};
   if (v.sampled) {
      out["trials"] = v.trials;
      if (v.holds) {
         out["note"] = "no violation found (" + std::to_string(v.trials) + " trials)";
      }
   }
   out["witness"] = to_json(v.witness);
   return out;
}

inline json read_json_file(const std::string& path)
{
   std::ifstream in(path);
   if (!in) {
      throw parse_error("cannot open '" + path + "'");
   }
   try {
      return json::parse(in);
   } catch (const nlohmann::json::parse_error& e) {
      throw parse_error("'" + path + "': " + e.what());
   }
}

inline Vec read_vector_file(const std::string& path, std::vector<std::string>& warnings)
{
   return vector_from_json(read_json_file(path), warnings);
}

inline Mat read_matrix_file(const std::string& path, std::vector<std::string>& warnings)
{
   return matrix_from_json(read_json_file(path), warnings);
}

inline void write_json_file(const std::string& path, const json& j)
{
   std::ofstream out(path);
   if (!out) {
      throw error("cannot write '" + path + "'");
   }
   out << j.dump(2) << '\n';
}

/// 64-bit FNV-1a over a canonical text form, rendered as 16 hex digits.
inline std::string digest(std::string_view canonical)
{
   std::uint64_t h = 0xcbf29ce484222325ULL;
   for (unsigned char c : canonical) {
      h ^= c;
      h *= 0x100000001b3ULL;
   }
   std::ostringstream os;
   os << std::hex;
   os.width(16);
   os.fill('0');
   os << h;
   return os.str();
}

} // namespace majorization::io

#endif
