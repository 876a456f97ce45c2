# SPDX-License-Identifier: Apache-2.0
#
# midband: upper mid-band UMi channel statistics toolkit
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------
"""Upper mid-band UMi channel statistics: path loss, delay and angular spreads, Monte Carlo."""

from ._core import (
    CiFit,
    FiFit,
    Lobe,
    LogNormalStat,
    Campaign,
    SchemaError,
    ParseError,
    ValidationError,
    __version__,
    load_bundled,
    read_csv,
    parse_csv,
    validate,
    select,
    fspl_1m,
    ci_fit,
    ci_predict,
    fi_fit,
    rms_delay_spread,
    synthesize_omni,
    omni_angular_spread,
    segment_lobes,
    fit_lognormal,
    expectation_published,
    expectation_strict,
    expectation_rounded,
    simulate,
    report_json,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
