#include "cdd/csv.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace cdd {

std::string format_double(double value) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  if (res.ec != std::errc()) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buf, res.ptr);
}

std::string CsvTable::to_string() const {
  std::string out;
  for (const auto& comment : comments) {
    out += "# ";
    out += comment;
    out += "\n";
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ",";
    out += header[i];
  }
  out += "\n";
  for (const auto& row : rows) {
    if (row.size() != header.size()) {
      throw std::logic_error("CsvTable: ragged row");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += format_double(row[i]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace cdd
