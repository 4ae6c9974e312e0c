/*
 * Copyright 2026 The pfaffsum authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PFAFFSUM_SUITES_HPP
#define PFAFFSUM_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pfaffsum/field.hpp"

namespace pfaffsum::suites {

/// One certificate line of a verification suite. A certificate only ever
/// states "certified over F_p at this seed/prime"; a failed one reads as
/// "not certified at this seed/prime", never as a disproof.
struct Certificate {
    std::string name;
    bool pass = false;
    std::string detail;
};

using CertList = std::vector<Certificate>;

/// Every suite runs its fullness tests at two distinct primes; a certificate
/// passes only when both verdicts are full.

/// Single-pfaffian representability of general ternary forms: s = 1 across a
/// family of degree matrices.
CertList thm_ternary(std::uint64_t seed, const PrimeField& p1, const PrimeField& p2);

/// Two pfaffians suffice for 4x4 degree matrices in four variables.
CertList thm_4x4(std::uint64_t seed, const PrimeField& p1, const PrimeField& p2);

/// k pfaffians suffice for 2k x 2k degree matrices in four variables; the
/// minimal certified s is recorded in the detail line.
CertList thm_main(std::uint64_t seed, const PrimeField& p1, const PrimeField& p2);

/// Pooled odd-size submaximal pfaffians of k matrices generate everything in
/// degree (a_11 + tr(A))/2, ternary case.
CertList prop_step3(std::uint64_t seed, const PrimeField& p1, const PrimeField& p2);

/// Multiplication by a general linear form is surjective at the thresholds.
CertList lemma_wl(std::uint64_t seed, const PrimeField& p1, const PrimeField& p2);

/// Generation facts for collections of general forms of prescribed degrees.
CertList generic_forms(std::uint64_t seed, const PrimeField& p1, const PrimeField& p2);

bool all_pass(const CertList& certs);

}  // namespace pfaffsum::suites

#endif
