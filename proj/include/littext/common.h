// Copyright 2026 The Littext Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LITTEXT_COMMON_H_
#define LITTEXT_COMMON_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace littext {

// Half-open byte range [begin, end) into some source string.
struct CharSpan {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool empty() const { return end == begin; }
  bool Contains(const CharSpan &other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool operator==(const CharSpan &) const = default;
};

enum class Verdict { kHomicide, kSuicide, kAccident, kNatural, kUndetermined };
enum class Gender { kFemale, kMale, kUnknown };

inline constexpr Verdict kAllVerdicts[] = {
    Verdict::kHomicide, Verdict::kSuicide, Verdict::kAccident,
    Verdict::kNatural, Verdict::kUndetermined};
inline constexpr Gender kAllGenders[] = {Gender::kFemale, Gender::kMale,
                                         Gender::kUnknown};

std::string_view VerdictName(Verdict verdict);
std::string_view GenderName(Gender gender);

// Case-insensitive; returns nullopt for anything outside the enum.
std::optional<Verdict> ParseVerdict(std::string_view name);
std::optional<Gender> ParseGender(std::string_view name);

// Malformed or unusable input (bad header, duplicate key, unknown flag...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A scene file written by an incompatible producer.
class UnsupportedVersionError : public InputError {
 public:
  explicit UnsupportedVersionError(int version);
  int version() const { return version_; }

 private:
  int version_;
};

// A layout that cannot place every run inside the canvas.
class LayoutOverflowError : public std::runtime_error {
 public:
  // required_height <= 0 means no canvas height would help (a single run is
  // wider than its column).
  LayoutOverflowError(const std::string &message, double required_height)
      : std::runtime_error(message), required_height_(required_height) {}
  double required_height() const { return required_height_; }

 private:
  double required_height_;
};

// Reads a whole file; throws InputError when it cannot be opened.
std::string ReadFile(const std::string &path);

// One line of a text file, without its terminator (LF or CRLF).
struct Line {
  std::string_view text;
  size_t offset = 0;
};
std::vector<Line> SplitLines(std::string_view content);

// Strips a leading UTF-8 byte order mark.
std::string_view StripBom(std::string_view content);

std::string AsciiLower(std::string_view s);
std::string AsciiUpper(std::string_view s);
std::string_view Trim(std::string_view s);

}  // namespace littext

#endif  // LITTEXT_COMMON_H_
