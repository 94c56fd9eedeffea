#include "aqc/render.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "aqc/errors.hpp"

namespace aqc {

using nlohmann::json;

std::optional<Format> parse_format(const std::string& name) {
  if (name == "plain") return Format::kPlain;
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  return std::nullopt;
}

MultiSpec parse_lengths(const std::string& text) {
  std::vector<unsigned> ls;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6) {
      throw InvalidArgument("bad length list \"" + text + "\"");
    }
    ls.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  return MultiSpec(std::move(ls));
}

std::string render_triangle(const CountTable& table, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::kJson: {
      json rows = json::array();
      for (const auto& row : table.rows) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.str());
        rows.push_back(std::move(r));
      }
      os << json{{"q", table.q}, {"rows", std::move(rows)}}.dump() << '\n';
      break;
    }
    case Format::kCsv:
      os << "n,k,value\n";
      for (std::size_t n = 0; n < table.rows.size(); ++n) {
        for (std::size_t k = 0; k < table.rows[n].size(); ++k) {
          os << n << ',' << k << ',' << table.rows[n][k] << '\n';
        }
      }
      break;
    case Format::kPlain: {
      std::size_t cols = 1;
      for (const auto& row : table.rows) cols = std::max(cols, row.size());
      std::vector<std::size_t> width(cols, 1);
      for (std::size_t k = 0; k < cols; ++k) width[k] = std::to_string(k).size() + 2;
      for (const auto& row : table.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].str().size());
      }
      const std::size_t nw = std::max<std::size_t>(1, std::to_string(table.rows.size() - 1).size());
      os << std::string(nw - 1, ' ') << 'n';
      for (std::size_t k = 0; k < cols; ++k) {
        const std::string h = "k=" + std::to_string(k);
        os << "  " << std::string(width[k] - h.size(), ' ') << h;
      }
      os << '\n';
      for (std::size_t n = 0; n < table.rows.size(); ++n) {
        const std::string ns = std::to_string(n);
        os << std::string(nw - ns.size(), ' ') << ns;
        for (std::size_t k = 0; k < cols; ++k) {
          const std::string v = k < table.rows[n].size() ? table.rows[n][k].str() : "0";
          os << "  " << std::string(width[k] - v.size(), ' ') << v;
        }
        os << '\n';
      }
      break;
    }
  }
  return os.str();
}

std::string render_free(unsigned q, const std::string& method, const std::vector<Nat>& values,
                        Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::kJson: {
      json vs = json::array();
      for (const auto& v : values) vs.push_back(v.str());
      os << json{{"q", q}, {"method", method}, {"values", std::move(vs)}}.dump() << '\n';
      break;
    }
    case Format::kCsv:
      os << "n,k,value\n";
      for (std::size_t n = 0; n < values.size(); ++n) os << n << ",0," << values[n] << '\n';
      break;
    case Format::kPlain:
      for (std::size_t n = 0; n < values.size(); ++n) os << (n ? "," : "") << values[n];
      os << '\n';
      break;
  }
  return os.str();
}

std::string render_multi(unsigned n, const MultiSpec& lengths,
                         const std::vector<std::pair<KVector, Nat>>& terms, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::kJson: {
      json ts = json::array();
      for (const auto& [ks, v] : terms) ts.push_back(json{{"ks", ks}, {"value", v.str()}});
      os << json{{"n", n}, {"lengths", lengths.lengths()}, {"terms", std::move(ts)}}.dump() << '\n';
      break;
    }
    case Format::kCsv:
      os << 'n';
      for (unsigned q : lengths.lengths()) os << ",k_" << q;
      os << ",value\n";
      for (const auto& [ks, v] : terms) {
        os << n;
        for (unsigned k : ks) os << ',' << k;
        os << ',' << v << '\n';
      }
      break;
    case Format::kPlain:
      for (const auto& [ks, v] : terms) {
        os << '(';
        for (std::size_t j = 0; j < ks.size(); ++j) os << (j ? "," : "") << ks[j];
        os << ") " << v << '\n';
      }
      break;
  }
  return os.str();
}

std::string render_polynomial(const MPoly& p, const FamilyTable& families, Format format) {
  std::ostringstream os;
  auto monomial_text = [&](const Monomial& m) {
    return m.is_one() ? std::string("1") : to_string(MPoly::term(Int(1), m), families);
  };
  switch (format) {
    case Format::kJson: {
      json ts = json::array();
      for (const auto& [m, c] : p.terms()) ts.push_back(json{{"monomial", monomial_text(m)}, {"value", c.get_str()}});
      os << json{{"polynomial", to_string(p, families)}, {"terms", std::move(ts)}}.dump() << '\n';
      break;
    }
    case Format::kCsv:
      os << "monomial,value\n";
      for (const auto& [m, c] : p.terms()) os << monomial_text(m) << ',' << c.get_str() << '\n';
      break;
    case Format::kPlain:
      os << to_string(p, families) << '\n';
      break;
  }
  return os.str();
}

}  // namespace aqc
