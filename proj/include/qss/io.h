// Copyright 2026 The qss-rec Authors
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

#ifndef QSS_IO_H
#define QSS_IO_H

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qss/qstate.h"
#include "qss/symplectic.h"

namespace qss {

/// Malformed input. `line` is 1-based, or 0 when the problem is not tied to a line.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &source, size_t line, const std::string &message);
    size_t line() const { return line_; }

   private:
    size_t line_;
};

/// Stabilizer file: `q n k` then n-k generator lines of 2n integers in
/// [0, q), interleaved a_1 b_1 ... a_n b_n. `#` starts a comment; blank
/// lines are ignored. Rank and self-orthogonality failures are reported as
/// ParseError.
StabilizerCode parse_code(std::istream &in, const std::string &source = "<input>");
StabilizerCode load_code(const std::string &path);
void write_code(std::ostream &out, const StabilizerCode &code);

/// State file: `q m` then q^m lines `index re im` in ascending index order.
QuditState parse_state(std::istream &in, const std::string &source = "<input>");
QuditState load_state(const std::string &path);
void write_state(std::ostream &out, const QuditState &state);
void save_state(const std::string &path, const QuditState &state);

/// Inline amplitudes: comma-separated entries, each `re` or `re:im`, giving
/// q^k amplitudes for a register of k qudits of dimension q.
QuditState parse_inline_state(const std::string &text, int q, size_t num_qudits);

}  // namespace qss

#endif
