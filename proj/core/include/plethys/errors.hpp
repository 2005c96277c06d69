/*
   Copyright 2026 The plethys authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PLETHYS_ERRORS_HPP
#define PLETHYS_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plethys {

/// A caller broke an interface contract: mismatched orders, mixed backends,
/// mixed precisions, or an unsupported conversion direction.
class ContractError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// The value lies outside the operation's mathematical domain.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Malformed external input: files, inline value lists, flag values.
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The root iteration missed the residual bound within the iteration budget.
/// Carries the best iterates and their residuals so sweeps can record the
/// failure instead of aborting.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& what, std::vector<std::complex<double>> best,
                     std::vector<double> res)
        : std::runtime_error(what), best_roots(std::move(best)), residuals(std::move(res)) {}

    std::vector<std::complex<double>> best_roots;
    std::vector<double> residuals;
};

/// A factorial-scaled coefficient failed to be an integer where the family
/// guarantees integrality.
class IntegralityError : public std::runtime_error {
  public:
    IntegralityError(const std::string& what, unsigned idx)
        : std::runtime_error(what), index(idx) {}

    unsigned index;
};

}  // namespace plethys

#endif
