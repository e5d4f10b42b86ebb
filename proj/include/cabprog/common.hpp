// Copyright 2026 The cabprog Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Diagnostics, source spans and the Result<T> carrier shared by every
// document-level operation (parsers, catalog loading, codec).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cabprog {

enum class Severity { kWarning, kError };

struct SourceSpan {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based, in bytes
  std::size_t offset = 0;  // 0-based byte offset

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

// Computes line/column for a byte offset. Offsets past the end are clamped to
// the last byte so that a span always points inside non-empty input.
inline SourceSpan span_at(std::string_view text, std::size_t offset) {
  if (text.empty()) return SourceSpan{1, 1, 0};
  offset = std::min(offset, text.size() - 1);
  SourceSpan span{1, 1, offset};
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++span.line;
      span.column = 1;
    } else {
      ++span.column;
    }
  }
  return span;
}

// Precomputed line starts for repeated offset -> span lookups.
class LineIndex {
 public:
  explicit LineIndex(std::string_view text) : size_(text.size()) {
    starts_.push_back(0);
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\n') starts_.push_back(i + 1);
    }
  }

  SourceSpan span(std::size_t offset) const {
    if (size_ == 0) return SourceSpan{1, 1, 0};
    offset = std::min(offset, size_ - 1);
    auto it = std::upper_bound(starts_.begin(), starts_.end(), offset);
    std::size_t line = static_cast<std::size_t>(it - starts_.begin());
    return SourceSpan{line, offset - starts_[line - 1] + 1, offset};
  }

 private:
  std::vector<std::size_t> starts_;
  std::size_t size_;
};

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string code;  // stable machine-readable identifier, e.g. "param-domain"
  std::string message;
  std::optional<SourceSpan> span;
};

using DiagnosticList = std::vector<Diagnostic>;

inline Diagnostic make_error(std::string code, std::string message,
                             std::optional<SourceSpan> span = std::nullopt) {
  return Diagnostic{Severity::kError, std::move(code), std::move(message), span};
}

inline Diagnostic make_warning(std::string code, std::string message,
                               std::optional<SourceSpan> span = std::nullopt) {
  return Diagnostic{Severity::kWarning, std::move(code), std::move(message),
                    span};
}

inline bool has_errors(const DiagnosticList& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) {
                       return d.severity == Severity::kError;
                     });
}

inline bool has_code(const DiagnosticList& diagnostics, std::string_view code) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [&](const Diagnostic& d) { return d.code == code; });
}

// "name:line:col: error[code]: message"
inline std::string format_diagnostic(const Diagnostic& d,
                                     std::string_view source_name = {}) {
  std::string out;
  if (!source_name.empty()) {
    out += source_name;
    out += ':';
  }
  if (d.span) {
    out += std::to_string(d.span->line) + ':' + std::to_string(d.span->column) +
           ": ";
  } else if (!source_name.empty()) {
    out += ' ';
  }
  out += d.severity == Severity::kError ? "error[" : "warning[";
  out += d.code;
  out += "]: ";
  out += d.message;
  return out;
}

// A value or the diagnostics explaining why there is none. Warnings may
// accompany a successful value.
template <typename T>
class Result {
 public:
  Result() = default;
  Result(T value, DiagnosticList diagnostics = {})
      : value_(std::move(value)), diagnostics_(std::move(diagnostics)) {}

  static Result failure(DiagnosticList diagnostics) {
    Result r;
    r.diagnostics_ = std::move(diagnostics);
    return r;
  }

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return *value_; }
  T& value() & { return *value_; }
  T&& value() && { return std::move(*value_); }
  const T* operator->() const { return &*value_; }

  const DiagnosticList& diagnostics() const { return diagnostics_; }
  DiagnosticList& diagnostics() { return diagnostics_; }

 private:
  std::optional<T> value_;
  DiagnosticList diagnostics_;
};

}  // namespace cabprog
