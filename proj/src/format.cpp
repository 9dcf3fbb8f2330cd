#include "abharm/format.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace abharm {
namespace {

void write_string(std::ostream& os, const std::string& s) {
  os << '"';
  for (char ch : s) {
    switch (ch) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          os << buf;
        } else {
          os << ch;
        }
    }
  }
  os << '"';
}

void newline(std::ostream& os, int indent, int depth) {
  if (indent <= 0) return;
  os << '\n' << std::string(static_cast<std::size_t>(indent * depth), ' ');
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

Json& Json::push(Json v) {
  auto* arr = std::get_if<Array>(&value_);
  if (!arr) throw std::logic_error("push on a non-array json value");
  arr->push_back(std::move(v));
  return *this;
}

Json& Json::set(const std::string& key, Json v) {
  auto* obj = std::get_if<Object>(&value_);
  if (!obj) throw std::logic_error("set on a non-object json value");
  for (auto& kv : *obj) {
    if (kv.first == key) {
      kv.second = std::move(v);
      return *this;
    }
  }
  obj->emplace_back(key, std::move(v));
  return *this;
}

void Json::dump_at(std::ostream& os, int indent, int depth) const {
  if (std::holds_alternative<std::nullptr_t>(value_)) {
    os << "null";
  } else if (const auto* b = std::get_if<bool>(&value_)) {
    os << (*b ? "true" : "false");
  } else if (const auto* i = std::get_if<std::int64_t>(&value_)) {
    os << *i;
  } else if (const auto* d = std::get_if<double>(&value_)) {
    // JSON has no inf/nan; those go out as strings.
    if (std::isfinite(*d)) {
      os << format_number(*d);
    } else {
      write_string(os, format_number(*d));
    }
  } else if (const auto* s = std::get_if<std::string>(&value_)) {
    write_string(os, *s);
  } else if (const auto* a = std::get_if<Array>(&value_)) {
    if (a->empty()) {
      os << "[]";
      return;
    }
    os << '[';
    for (std::size_t k = 0; k < a->size(); ++k) {
      if (k) os << ',';
      newline(os, indent, depth + 1);
      (*a)[k].dump_at(os, indent, depth + 1);
    }
    newline(os, indent, depth);
    os << ']';
  } else if (const auto* o = std::get_if<Object>(&value_)) {
    if (o->empty()) {
      os << "{}";
      return;
    }
    os << '{';
    for (std::size_t k = 0; k < o->size(); ++k) {
      if (k) os << ',';
      newline(os, indent, depth + 1);
      write_string(os, (*o)[k].first);
      os << (indent > 0 ? ": " : ":");
      (*o)[k].second.dump_at(os, indent, depth + 1);
    }
    newline(os, indent, depth);
    os << '}';
  }
}

void Json::dump(std::ostream& os, int indent) const {
  dump_at(os, indent, 0);
  if (indent > 0) os << '\n';
}

std::string Json::dump(int indent) const {
  std::ostringstream os;
  dump(os, indent);
  return os.str();
}

}  // namespace abharm
