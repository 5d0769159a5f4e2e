// Copyright 2026 The Qasida Authors. All Rights Reserved.
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

// Generated by tools/gen_presentation_forms.py (Unicode 13.0.0). Do not edit.
#pragma once

#include <array>
#include <string_view>

namespace qasida::detail {

struct PresentationFold {
  char32_t from;
  std::u32string_view to;
};

// Sorted by `from`.
inline constexpr std::array<PresentationFold, 731> kPresentationFolds{{
    {0xFB50, U"\U00000671"},
    {0xFB51, U"\U00000671"},
    {0xFB52, U"\U0000067B"},
    {0xFB53, U"\U0000067B"},
    {0xFB54, U"\U0000067B"},
    {0xFB55, U"\U0000067B"},
    {0xFB56, U"\U0000067E"},
    {0xFB57, U"\U0000067E"},
    {0xFB58, U"\U0000067E"},
    {0xFB59, U"\U0000067E"},
    {0xFB5A, U"\U00000680"},
    {0xFB5B, U"\U00000680"},
    {0xFB5C, U"\U00000680"},
    {0xFB5D, U"\U00000680"},
    {0xFB5E, U"\U0000067A"},
    {0xFB5F, U"\U0000067A"},
    {0xFB60, U"\U0000067A"},
    {0xFB61, U"\U0000067A"},
    {0xFB62, U"\U0000067F"},
    {0xFB63, U"\U0000067F"},
    {0xFB64, U"\U0000067F"},
    {0xFB65, U"\U0000067F"},
    {0xFB66, U"\U00000679"},
    {0xFB67, U"\U00000679"},
    {0xFB68, U"\U00000679"},
    {0xFB69, U"\U00000679"},
    {0xFB6A, U"\U000006A4"},
    {0xFB6B, U"\U000006A4"},
    {0xFB6C, U"\U000006A4"},
    {0xFB6D, U"\U000006A4"},
    {0xFB6E, U"\U000006A6"},
    {0xFB6F, U"\U000006A6"},
    {0xFB70, U"\U000006A6"},
    {0xFB71, U"\U000006A6"},
    {0xFB72, U"\U00000684"},
    {0xFB73, U"\U00000684"},
    {0xFB74, U"\U00000684"},
    {0xFB75, U"\U00000684"},
    {0xFB76, U"\U00000683"},
    {0xFB77, U"\U00000683"},
    {0xFB78, U"\U00000683"},
    {0xFB79, U"\U00000683"},
    {0xFB7A, U"\U00000686"},
    {0xFB7B, U"\U00000686"},
    {0xFB7C, U"\U00000686"},
    {0xFB7D, U"\U00000686"},
    {0xFB7E, U"\U00000687"},
    {0xFB7F, U"\U00000687"},
    {0xFB80, U"\U00000687"},
    {0xFB81, U"\U00000687"},
    {0xFB82, U"\U0000068D"},
    {0xFB83, U"\U0000068D"},
    {0xFB84, U"\U0000068C"},
    {0xFB85, U"\U0000068C"},
    {0xFB86, U"\U0000068E"},
    {0xFB87, U"\U0000068E"},
    {0xFB88, U"\U00000688"},
    {0xFB89, U"\U00000688"},
    {0xFB8A, U"\U00000698"},
    {0xFB8B, U"\U00000698"},
    {0xFB8C, U"\U00000691"},
    {0xFB8D, U"\U00000691"},
    {0xFB8E, U"\U000006A9"},
    {0xFB8F, U"\U000006A9"},
    {0xFB90, U"\U000006A9"},
    {0xFB91, U"\U000006A9"},
    {0xFB92, U"\U000006AF"},
    {0xFB93, U"\U000006AF"},
    {0xFB94, U"\U000006AF"},
    {0xFB95, U"\U000006AF"},
    {0xFB96, U"\U000006B3"},
    {0xFB97, U"\U000006B3"},
    {0xFB98, U"\U000006B3"},
    {0xFB99, U"\U000006B3"},
    {0xFB9A, U"\U000006B1"},
    {0xFB9B, U"\U000006B1"},
    {0xFB9C, U"\U000006B1"},
    {0xFB9D, U"\U000006B1"},
    {0xFB9E, U"\U000006BA"},
    {0xFB9F, U"\U000006BA"},
    {0xFBA0, U"\U000006BB"},
    {0xFBA1, U"\U000006BB"},
    {0xFBA2, U"\U000006BB"},
    {0xFBA3, U"\U000006BB"},
    {0xFBA4, U"\U000006C0"},
    {0xFBA5, U"\U000006C0"},
    {0xFBA6, U"\U000006C1"},
    {0xFBA7, U"\U000006C1"},
    {0xFBA8, U"\U000006C1"},
    {0xFBA9, U"\U000006C1"},
    {0xFBAA, U"\U000006BE"},
    {0xFBAB, U"\U000006BE"},
    {0xFBAC, U"\U000006BE"},
    {0xFBAD, U"\U000006BE"},
    {0xFBAE, U"\U000006D2"},
    {0xFBAF, U"\U000006D2"},
    {0xFBB0, U"\U000006D3"},
    {0xFBB1, U"\U000006D3"},
    {0xFBD3, U"\U000006AD"},
    {0xFBD4, U"\U000006AD"},
    {0xFBD5, U"\U000006AD"},
    {0xFBD6, U"\U000006AD"},
    {0xFBD7, U"\U000006C7"},
    {0xFBD8, U"\U000006C7"},
    {0xFBD9, U"\U000006C6"},
    {0xFBDA, U"\U000006C6"},
    {0xFBDB, U"\U000006C8"},
    {0xFBDC, U"\U000006C8"},
    {0xFBDD, U"\U000006C7\U00000674"},
    {0xFBDE, U"\U000006CB"},
    {0xFBDF, U"\U000006CB"},
    {0xFBE0, U"\U000006C5"},
    {0xFBE1, U"\U000006C5"},
    {0xFBE2, U"\U000006C9"},
    {0xFBE3, U"\U000006C9"},
    {0xFBE4, U"\U000006D0"},
    {0xFBE5, U"\U000006D0"},
    {0xFBE6, U"\U000006D0"},
    {0xFBE7, U"\U000006D0"},
    {0xFBE8, U"\U00000649"},
    {0xFBE9, U"\U00000649"},
    {0xFBEA, U"\U00000626\U00000627"},
    {0xFBEB, U"\U00000626\U00000627"},
    {0xFBEC, U"\U00000626\U000006D5"},
    {0xFBED, U"\U00000626\U000006D5"},
    {0xFBEE, U"\U00000626\U00000648"},
    {0xFBEF, U"\U00000626\U00000648"},
    {0xFBF0, U"\U00000626\U000006C7"},
    {0xFBF1, U"\U00000626\U000006C7"},
    {0xFBF2, U"\U00000626\U000006C6"},
    {0xFBF3, U"\U00000626\U000006C6"},
    {0xFBF4, U"\U00000626\U000006C8"},
    {0xFBF5, U"\U00000626\U000006C8"},
    {0xFBF6, U"\U00000626\U000006D0"},
    {0xFBF7, U"\U00000626\U000006D0"},
    {0xFBF8, U"\U00000626\U000006D0"},
    {0xFBF9, U"\U00000626\U00000649"},
    {0xFBFA, U"\U00000626\U00000649"},
    {0xFBFB, U"\U00000626\U00000649"},
    {0xFBFC, U"\U000006CC"},
    {0xFBFD, U"\U000006CC"},
    {0xFBFE, U"\U000006CC"},
    {0xFBFF, U"\U000006CC"},
    {0xFC00, U"\U00000626\U0000062C"},
    {0xFC01, U"\U00000626\U0000062D"},
    {0xFC02, U"\U00000626\U00000645"},
    {0xFC03, U"\U00000626\U00000649"},
    {0xFC04, U"\U00000626\U0000064A"},
    {0xFC05, U"\U00000628\U0000062C"},
    {0xFC06, U"\U00000628\U0000062D"},
    {0xFC07, U"\U00000628\U0000062E"},
    {0xFC08, U"\U00000628\U00000645"},
    {0xFC09, U"\U00000628\U00000649"},
    {0xFC0A, U"\U00000628\U0000064A"},
    {0xFC0B, U"\U0000062A\U0000062C"},
    {0xFC0C, U"\U0000062A\U0000062D"},
    {0xFC0D, U"\U0000062A\U0000062E"},
    {0xFC0E, U"\U0000062A\U00000645"},
    {0xFC0F, U"\U0000062A\U00000649"},
    {0xFC10, U"\U0000062A\U0000064A"},
    {0xFC11, U"\U0000062B\U0000062C"},
    {0xFC12, U"\U0000062B\U00000645"},
    {0xFC13, U"\U0000062B\U00000649"},
    {0xFC14, U"\U0000062B\U0000064A"},
    {0xFC15, U"\U0000062C\U0000062D"},
    {0xFC16, U"\U0000062C\U00000645"},
    {0xFC17, U"\U0000062D\U0000062C"},
    {0xFC18, U"\U0000062D\U00000645"},
    {0xFC19, U"\U0000062E\U0000062C"},
    {0xFC1A, U"\U0000062E\U0000062D"},
    {0xFC1B, U"\U0000062E\U00000645"},
    {0xFC1C, U"\U00000633\U0000062C"},
    {0xFC1D, U"\U00000633\U0000062D"},
    {0xFC1E, U"\U00000633\U0000062E"},
    {0xFC1F, U"\U00000633\U00000645"},
    {0xFC20, U"\U00000635\U0000062D"},
    {0xFC21, U"\U00000635\U00000645"},
    {0xFC22, U"\U00000636\U0000062C"},
    {0xFC23, U"\U00000636\U0000062D"},
    {0xFC24, U"\U00000636\U0000062E"},
    {0xFC25, U"\U00000636\U00000645"},
    {0xFC26, U"\U00000637\U0000062D"},
    {0xFC27, U"\U00000637\U00000645"},
    {0xFC28, U"\U00000638\U00000645"},
    {0xFC29, U"\U00000639\U0000062C"},
    {0xFC2A, U"\U00000639\U00000645"},
    {0xFC2B, U"\U0000063A\U0000062C"},
    {0xFC2C, U"\U0000063A\U00000645"},
    {0xFC2D, U"\U00000641\U0000062C"},
    {0xFC2E, U"\U00000641\U0000062D"},
    {0xFC2F, U"\U00000641\U0000062E"},
    {0xFC30, U"\U00000641\U00000645"},
    {0xFC31, U"\U00000641\U00000649"},
    {0xFC32, U"\U00000641\U0000064A"},
    {0xFC33, U"\U00000642\U0000062D"},
    {0xFC34, U"\U00000642\U00000645"},
    {0xFC35, U"\U00000642\U00000649"},
    {0xFC36, U"\U00000642\U0000064A"},
    {0xFC37, U"\U00000643\U00000627"},
    {0xFC38, U"\U00000643\U0000062C"},
    {0xFC39, U"\U00000643\U0000062D"},
    {0xFC3A, U"\U00000643\U0000062E"},
    {0xFC3B, U"\U00000643\U00000644"},
    {0xFC3C, U"\U00000643\U00000645"},
    {0xFC3D, U"\U00000643\U00000649"},
    {0xFC3E, U"\U00000643\U0000064A"},
    {0xFC3F, U"\U00000644\U0000062C"},
    {0xFC40, U"\U00000644\U0000062D"},
    {0xFC41, U"\U00000644\U0000062E"},
    {0xFC42, U"\U00000644\U00000645"},
    {0xFC43, U"\U00000644\U00000649"},
    {0xFC44, U"\U00000644\U0000064A"},
    {0xFC45, U"\U00000645\U0000062C"},
    {0xFC46, U"\U00000645\U0000062D"},
    {0xFC47, U"\U00000645\U0000062E"},
    {0xFC48, U"\U00000645\U00000645"},
    {0xFC49, U"\U00000645\U00000649"},
    {0xFC4A, U"\U00000645\U0000064A"},
    {0xFC4B, U"\U00000646\U0000062C"},
    {0xFC4C, U"\U00000646\U0000062D"},
    {0xFC4D, U"\U00000646\U0000062E"},
    {0xFC4E, U"\U00000646\U00000645"},
    {0xFC4F, U"\U00000646\U00000649"},
    {0xFC50, U"\U00000646\U0000064A"},
    {0xFC51, U"\U00000647\U0000062C"},
    {0xFC52, U"\U00000647\U00000645"},
    {0xFC53, U"\U00000647\U00000649"},
    {0xFC54, U"\U00000647\U0000064A"},
    {0xFC55, U"\U0000064A\U0000062C"},
    {0xFC56, U"\U0000064A\U0000062D"},
    {0xFC57, U"\U0000064A\U0000062E"},
    {0xFC58, U"\U0000064A\U00000645"},
    {0xFC59, U"\U0000064A\U00000649"},
    {0xFC5A, U"\U0000064A\U0000064A"},
    {0xFC5B, U"\U00000630\U00000670"},
    {0xFC5C, U"\U00000631\U00000670"},
    {0xFC5D, U"\U00000649\U00000670"},
    {0xFC5E, U"\U0000064C\U00000651"},
    {0xFC5F, U"\U0000064D\U00000651"},
    {0xFC60, U"\U0000064E\U00000651"},
    {0xFC61, U"\U0000064F\U00000651"},
    {0xFC62, U"\U00000650\U00000651"},
    {0xFC63, U"\U00000651\U00000670"},
    {0xFC64, U"\U00000626\U00000631"},
    {0xFC65, U"\U00000626\U00000632"},
    {0xFC66, U"\U00000626\U00000645"},
    {0xFC67, U"\U00000626\U00000646"},
    {0xFC68, U"\U00000626\U00000649"},
    {0xFC69, U"\U00000626\U0000064A"},
    {0xFC6A, U"\U00000628\U00000631"},
    {0xFC6B, U"\U00000628\U00000632"},
    {0xFC6C, U"\U00000628\U00000645"},
    {0xFC6D, U"\U00000628\U00000646"},
    {0xFC6E, U"\U00000628\U00000649"},
    {0xFC6F, U"\U00000628\U0000064A"},
    {0xFC70, U"\U0000062A\U00000631"},
    {0xFC71, U"\U0000062A\U00000632"},
    {0xFC72, U"\U0000062A\U00000645"},
    {0xFC73, U"\U0000062A\U00000646"},
    {0xFC74, U"\U0000062A\U00000649"},
    {0xFC75, U"\U0000062A\U0000064A"},
    {0xFC76, U"\U0000062B\U00000631"},
    {0xFC77, U"\U0000062B\U00000632"},
    {0xFC78, U"\U0000062B\U00000645"},
    {0xFC79, U"\U0000062B\U00000646"},
    {0xFC7A, U"\U0000062B\U00000649"},
    {0xFC7B, U"\U0000062B\U0000064A"},
    {0xFC7C, U"\U00000641\U00000649"},
    {0xFC7D, U"\U00000641\U0000064A"},
    {0xFC7E, U"\U00000642\U00000649"},
    {0xFC7F, U"\U00000642\U0000064A"},
    {0xFC80, U"\U00000643\U00000627"},
    {0xFC81, U"\U00000643\U00000644"},
    {0xFC82, U"\U00000643\U00000645"},
    {0xFC83, U"\U00000643\U00000649"},
    {0xFC84, U"\U00000643\U0000064A"},
    {0xFC85, U"\U00000644\U00000645"},
    {0xFC86, U"\U00000644\U00000649"},
    {0xFC87, U"\U00000644\U0000064A"},
    {0xFC88, U"\U00000645\U00000627"},
    {0xFC89, U"\U00000645\U00000645"},
    {0xFC8A, U"\U00000646\U00000631"},
    {0xFC8B, U"\U00000646\U00000632"},
    {0xFC8C, U"\U00000646\U00000645"},
    {0xFC8D, U"\U00000646\U00000646"},
    {0xFC8E, U"\U00000646\U00000649"},
    {0xFC8F, U"\U00000646\U0000064A"},
    {0xFC90, U"\U00000649\U00000670"},
    {0xFC91, U"\U0000064A\U00000631"},
    {0xFC92, U"\U0000064A\U00000632"},
    {0xFC93, U"\U0000064A\U00000645"},
    {0xFC94, U"\U0000064A\U00000646"},
    {0xFC95, U"\U0000064A\U00000649"},
    {0xFC96, U"\U0000064A\U0000064A"},
    {0xFC97, U"\U00000626\U0000062C"},
    {0xFC98, U"\U00000626\U0000062D"},
    {0xFC99, U"\U00000626\U0000062E"},
    {0xFC9A, U"\U00000626\U00000645"},
    {0xFC9B, U"\U00000626\U00000647"},
    {0xFC9C, U"\U00000628\U0000062C"},
    {0xFC9D, U"\U00000628\U0000062D"},
    {0xFC9E, U"\U00000628\U0000062E"},
    {0xFC9F, U"\U00000628\U00000645"},
    {0xFCA0, U"\U00000628\U00000647"},
    {0xFCA1, U"\U0000062A\U0000062C"},
    {0xFCA2, U"\U0000062A\U0000062D"},
    {0xFCA3, U"\U0000062A\U0000062E"},
    {0xFCA4, U"\U0000062A\U00000645"},
    {0xFCA5, U"\U0000062A\U00000647"},
    {0xFCA6, U"\U0000062B\U00000645"},
    {0xFCA7, U"\U0000062C\U0000062D"},
    {0xFCA8, U"\U0000062C\U00000645"},
    {0xFCA9, U"\U0000062D\U0000062C"},
    {0xFCAA, U"\U0000062D\U00000645"},
    {0xFCAB, U"\U0000062E\U0000062C"},
    {0xFCAC, U"\U0000062E\U00000645"},
    {0xFCAD, U"\U00000633\U0000062C"},
    {0xFCAE, U"\U00000633\U0000062D"},
    {0xFCAF, U"\U00000633\U0000062E"},
    {0xFCB0, U"\U00000633\U00000645"},
    {0xFCB1, U"\U00000635\U0000062D"},
    {0xFCB2, U"\U00000635\U0000062E"},
    {0xFCB3, U"\U00000635\U00000645"},
    {0xFCB4, U"\U00000636\U0000062C"},
    {0xFCB5, U"\U00000636\U0000062D"},
    {0xFCB6, U"\U00000636\U0000062E"},
    {0xFCB7, U"\U00000636\U00000645"},
    {0xFCB8, U"\U00000637\U0000062D"},
    {0xFCB9, U"\U00000638\U00000645"},
    {0xFCBA, U"\U00000639\U0000062C"},
    {0xFCBB, U"\U00000639\U00000645"},
    {0xFCBC, U"\U0000063A\U0000062C"},
    {0xFCBD, U"\U0000063A\U00000645"},
    {0xFCBE, U"\U00000641\U0000062C"},
    {0xFCBF, U"\U00000641\U0000062D"},
    {0xFCC0, U"\U00000641\U0000062E"},
    {0xFCC1, U"\U00000641\U00000645"},
    {0xFCC2, U"\U00000642\U0000062D"},
    {0xFCC3, U"\U00000642\U00000645"},
    {0xFCC4, U"\U00000643\U0000062C"},
    {0xFCC5, U"\U00000643\U0000062D"},
    {0xFCC6, U"\U00000643\U0000062E"},
    {0xFCC7, U"\U00000643\U00000644"},
    {0xFCC8, U"\U00000643\U00000645"},
    {0xFCC9, U"\U00000644\U0000062C"},
    {0xFCCA, U"\U00000644\U0000062D"},
    {0xFCCB, U"\U00000644\U0000062E"},
    {0xFCCC, U"\U00000644\U00000645"},
    {0xFCCD, U"\U00000644\U00000647"},
    {0xFCCE, U"\U00000645\U0000062C"},
    {0xFCCF, U"\U00000645\U0000062D"},
    {0xFCD0, U"\U00000645\U0000062E"},
    {0xFCD1, U"\U00000645\U00000645"},
    {0xFCD2, U"\U00000646\U0000062C"},
    {0xFCD3, U"\U00000646\U0000062D"},
    {0xFCD4, U"\U00000646\U0000062E"},
    {0xFCD5, U"\U00000646\U00000645"},
    {0xFCD6, U"\U00000646\U00000647"},
    {0xFCD7, U"\U00000647\U0000062C"},
    {0xFCD8, U"\U00000647\U00000645"},
    {0xFCD9, U"\U00000647\U00000670"},
    {0xFCDA, U"\U0000064A\U0000062C"},
    {0xFCDB, U"\U0000064A\U0000062D"},
    {0xFCDC, U"\U0000064A\U0000062E"},
    {0xFCDD, U"\U0000064A\U00000645"},
    {0xFCDE, U"\U0000064A\U00000647"},
    {0xFCDF, U"\U00000626\U00000645"},
    {0xFCE0, U"\U00000626\U00000647"},
    {0xFCE1, U"\U00000628\U00000645"},
    {0xFCE2, U"\U00000628\U00000647"},
    {0xFCE3, U"\U0000062A\U00000645"},
    {0xFCE4, U"\U0000062A\U00000647"},
    {0xFCE5, U"\U0000062B\U00000645"},
    {0xFCE6, U"\U0000062B\U00000647"},
    {0xFCE7, U"\U00000633\U00000645"},
    {0xFCE8, U"\U00000633\U00000647"},
    {0xFCE9, U"\U00000634\U00000645"},
    {0xFCEA, U"\U00000634\U00000647"},
    {0xFCEB, U"\U00000643\U00000644"},
    {0xFCEC, U"\U00000643\U00000645"},
    {0xFCED, U"\U00000644\U00000645"},
    {0xFCEE, U"\U00000646\U00000645"},
    {0xFCEF, U"\U00000646\U00000647"},
    {0xFCF0, U"\U0000064A\U00000645"},
    {0xFCF1, U"\U0000064A\U00000647"},
    {0xFCF2, U"\U0000064E\U00000651"},
    {0xFCF3, U"\U0000064F\U00000651"},
    {0xFCF4, U"\U00000650\U00000651"},
    {0xFCF5, U"\U00000637\U00000649"},
    {0xFCF6, U"\U00000637\U0000064A"},
    {0xFCF7, U"\U00000639\U00000649"},
    {0xFCF8, U"\U00000639\U0000064A"},
    {0xFCF9, U"\U0000063A\U00000649"},
    {0xFCFA, U"\U0000063A\U0000064A"},
    {0xFCFB, U"\U00000633\U00000649"},
    {0xFCFC, U"\U00000633\U0000064A"},
    {0xFCFD, U"\U00000634\U00000649"},
    {0xFCFE, U"\U00000634\U0000064A"},
    {0xFCFF, U"\U0000062D\U00000649"},
    {0xFD00, U"\U0000062D\U0000064A"},
    {0xFD01, U"\U0000062C\U00000649"},
    {0xFD02, U"\U0000062C\U0000064A"},
    {0xFD03, U"\U0000062E\U00000649"},
    {0xFD04, U"\U0000062E\U0000064A"},
    {0xFD05, U"\U00000635\U00000649"},
    {0xFD06, U"\U00000635\U0000064A"},
    {0xFD07, U"\U00000636\U00000649"},
    {0xFD08, U"\U00000636\U0000064A"},
    {0xFD09, U"\U00000634\U0000062C"},
    {0xFD0A, U"\U00000634\U0000062D"},
    {0xFD0B, U"\U00000634\U0000062E"},
    {0xFD0C, U"\U00000634\U00000645"},
    {0xFD0D, U"\U00000634\U00000631"},
    {0xFD0E, U"\U00000633\U00000631"},
    {0xFD0F, U"\U00000635\U00000631"},
    {0xFD10, U"\U00000636\U00000631"},
    {0xFD11, U"\U00000637\U00000649"},
    {0xFD12, U"\U00000637\U0000064A"},
    {0xFD13, U"\U00000639\U00000649"},
    {0xFD14, U"\U00000639\U0000064A"},
    {0xFD15, U"\U0000063A\U00000649"},
    {0xFD16, U"\U0000063A\U0000064A"},
    {0xFD17, U"\U00000633\U00000649"},
    {0xFD18, U"\U00000633\U0000064A"},
    {0xFD19, U"\U00000634\U00000649"},
    {0xFD1A, U"\U00000634\U0000064A"},
    {0xFD1B, U"\U0000062D\U00000649"},
    {0xFD1C, U"\U0000062D\U0000064A"},
    {0xFD1D, U"\U0000062C\U00000649"},
    {0xFD1E, U"\U0000062C\U0000064A"},
    {0xFD1F, U"\U0000062E\U00000649"},
    {0xFD20, U"\U0000062E\U0000064A"},
    {0xFD21, U"\U00000635\U00000649"},
    {0xFD22, U"\U00000635\U0000064A"},
    {0xFD23, U"\U00000636\U00000649"},
    {0xFD24, U"\U00000636\U0000064A"},
    {0xFD25, U"\U00000634\U0000062C"},
    {0xFD26, U"\U00000634\U0000062D"},
    {0xFD27, U"\U00000634\U0000062E"},
    {0xFD28, U"\U00000634\U00000645"},
    {0xFD29, U"\U00000634\U00000631"},
    {0xFD2A, U"\U00000633\U00000631"},
    {0xFD2B, U"\U00000635\U00000631"},
    {0xFD2C, U"\U00000636\U00000631"},
    {0xFD2D, U"\U00000634\U0000062C"},
    {0xFD2E, U"\U00000634\U0000062D"},
    {0xFD2F, U"\U00000634\U0000062E"},
    {0xFD30, U"\U00000634\U00000645"},
    {0xFD31, U"\U00000633\U00000647"},
    {0xFD32, U"\U00000634\U00000647"},
    {0xFD33, U"\U00000637\U00000645"},
    {0xFD34, U"\U00000633\U0000062C"},
    {0xFD35, U"\U00000633\U0000062D"},
    {0xFD36, U"\U00000633\U0000062E"},
    {0xFD37, U"\U00000634\U0000062C"},
    {0xFD38, U"\U00000634\U0000062D"},
    {0xFD39, U"\U00000634\U0000062E"},
    {0xFD3A, U"\U00000637\U00000645"},
    {0xFD3B, U"\U00000638\U00000645"},
    {0xFD3C, U"\U00000627\U0000064B"},
    {0xFD3D, U"\U00000627\U0000064B"},
    {0xFD50, U"\U0000062A\U0000062C\U00000645"},
    {0xFD51, U"\U0000062A\U0000062D\U0000062C"},
    {0xFD52, U"\U0000062A\U0000062D\U0000062C"},
    {0xFD53, U"\U0000062A\U0000062D\U00000645"},
    {0xFD54, U"\U0000062A\U0000062E\U00000645"},
    {0xFD55, U"\U0000062A\U00000645\U0000062C"},
    {0xFD56, U"\U0000062A\U00000645\U0000062D"},
    {0xFD57, U"\U0000062A\U00000645\U0000062E"},
    {0xFD58, U"\U0000062C\U00000645\U0000062D"},
    {0xFD59, U"\U0000062C\U00000645\U0000062D"},
    {0xFD5A, U"\U0000062D\U00000645\U0000064A"},
    {0xFD5B, U"\U0000062D\U00000645\U00000649"},
    {0xFD5C, U"\U00000633\U0000062D\U0000062C"},
    {0xFD5D, U"\U00000633\U0000062C\U0000062D"},
    {0xFD5E, U"\U00000633\U0000062C\U00000649"},
    {0xFD5F, U"\U00000633\U00000645\U0000062D"},
    {0xFD60, U"\U00000633\U00000645\U0000062D"},
    {0xFD61, U"\U00000633\U00000645\U0000062C"},
    {0xFD62, U"\U00000633\U00000645\U00000645"},
    {0xFD63, U"\U00000633\U00000645\U00000645"},
    {0xFD64, U"\U00000635\U0000062D\U0000062D"},
    {0xFD65, U"\U00000635\U0000062D\U0000062D"},
    {0xFD66, U"\U00000635\U00000645\U00000645"},
    {0xFD67, U"\U00000634\U0000062D\U00000645"},
    {0xFD68, U"\U00000634\U0000062D\U00000645"},
    {0xFD69, U"\U00000634\U0000062C\U0000064A"},
    {0xFD6A, U"\U00000634\U00000645\U0000062E"},
    {0xFD6B, U"\U00000634\U00000645\U0000062E"},
    {0xFD6C, U"\U00000634\U00000645\U00000645"},
    {0xFD6D, U"\U00000634\U00000645\U00000645"},
    {0xFD6E, U"\U00000636\U0000062D\U00000649"},
    {0xFD6F, U"\U00000636\U0000062E\U00000645"},
    {0xFD70, U"\U00000636\U0000062E\U00000645"},
    {0xFD71, U"\U00000637\U00000645\U0000062D"},
    {0xFD72, U"\U00000637\U00000645\U0000062D"},
    {0xFD73, U"\U00000637\U00000645\U00000645"},
    {0xFD74, U"\U00000637\U00000645\U0000064A"},
    {0xFD75, U"\U00000639\U0000062C\U00000645"},
    {0xFD76, U"\U00000639\U00000645\U00000645"},
    {0xFD77, U"\U00000639\U00000645\U00000645"},
    {0xFD78, U"\U00000639\U00000645\U00000649"},
    {0xFD79, U"\U0000063A\U00000645\U00000645"},
    {0xFD7A, U"\U0000063A\U00000645\U0000064A"},
    {0xFD7B, U"\U0000063A\U00000645\U00000649"},
    {0xFD7C, U"\U00000641\U0000062E\U00000645"},
    {0xFD7D, U"\U00000641\U0000062E\U00000645"},
    {0xFD7E, U"\U00000642\U00000645\U0000062D"},
    {0xFD7F, U"\U00000642\U00000645\U00000645"},
    {0xFD80, U"\U00000644\U0000062D\U00000645"},
    {0xFD81, U"\U00000644\U0000062D\U0000064A"},
    {0xFD82, U"\U00000644\U0000062D\U00000649"},
    {0xFD83, U"\U00000644\U0000062C\U0000062C"},
    {0xFD84, U"\U00000644\U0000062C\U0000062C"},
    {0xFD85, U"\U00000644\U0000062E\U00000645"},
    {0xFD86, U"\U00000644\U0000062E\U00000645"},
    {0xFD87, U"\U00000644\U00000645\U0000062D"},
    {0xFD88, U"\U00000644\U00000645\U0000062D"},
    {0xFD89, U"\U00000645\U0000062D\U0000062C"},
    {0xFD8A, U"\U00000645\U0000062D\U00000645"},
    {0xFD8B, U"\U00000645\U0000062D\U0000064A"},
    {0xFD8C, U"\U00000645\U0000062C\U0000062D"},
    {0xFD8D, U"\U00000645\U0000062C\U00000645"},
    {0xFD8E, U"\U00000645\U0000062E\U0000062C"},
    {0xFD8F, U"\U00000645\U0000062E\U00000645"},
    {0xFD92, U"\U00000645\U0000062C\U0000062E"},
    {0xFD93, U"\U00000647\U00000645\U0000062C"},
    {0xFD94, U"\U00000647\U00000645\U00000645"},
    {0xFD95, U"\U00000646\U0000062D\U00000645"},
    {0xFD96, U"\U00000646\U0000062D\U00000649"},
    {0xFD97, U"\U00000646\U0000062C\U00000645"},
    {0xFD98, U"\U00000646\U0000062C\U00000645"},
    {0xFD99, U"\U00000646\U0000062C\U00000649"},
    {0xFD9A, U"\U00000646\U00000645\U0000064A"},
    {0xFD9B, U"\U00000646\U00000645\U00000649"},
    {0xFD9C, U"\U0000064A\U00000645\U00000645"},
    {0xFD9D, U"\U0000064A\U00000645\U00000645"},
    {0xFD9E, U"\U00000628\U0000062E\U0000064A"},
    {0xFD9F, U"\U0000062A\U0000062C\U0000064A"},
    {0xFDA0, U"\U0000062A\U0000062C\U00000649"},
    {0xFDA1, U"\U0000062A\U0000062E\U0000064A"},
    {0xFDA2, U"\U0000062A\U0000062E\U00000649"},
    {0xFDA3, U"\U0000062A\U00000645\U0000064A"},
    {0xFDA4, U"\U0000062A\U00000645\U00000649"},
    {0xFDA5, U"\U0000062C\U00000645\U0000064A"},
    {0xFDA6, U"\U0000062C\U0000062D\U00000649"},
    {0xFDA7, U"\U0000062C\U00000645\U00000649"},
    {0xFDA8, U"\U00000633\U0000062E\U00000649"},
    {0xFDA9, U"\U00000635\U0000062D\U0000064A"},
    {0xFDAA, U"\U00000634\U0000062D\U0000064A"},
    {0xFDAB, U"\U00000636\U0000062D\U0000064A"},
    {0xFDAC, U"\U00000644\U0000062C\U0000064A"},
    {0xFDAD, U"\U00000644\U00000645\U0000064A"},
    {0xFDAE, U"\U0000064A\U0000062D\U0000064A"},
    {0xFDAF, U"\U0000064A\U0000062C\U0000064A"},
    {0xFDB0, U"\U0000064A\U00000645\U0000064A"},
    {0xFDB1, U"\U00000645\U00000645\U0000064A"},
    {0xFDB2, U"\U00000642\U00000645\U0000064A"},
    {0xFDB3, U"\U00000646\U0000062D\U0000064A"},
    {0xFDB4, U"\U00000642\U00000645\U0000062D"},
    {0xFDB5, U"\U00000644\U0000062D\U00000645"},
    {0xFDB6, U"\U00000639\U00000645\U0000064A"},
    {0xFDB7, U"\U00000643\U00000645\U0000064A"},
    {0xFDB8, U"\U00000646\U0000062C\U0000062D"},
    {0xFDB9, U"\U00000645\U0000062E\U0000064A"},
    {0xFDBA, U"\U00000644\U0000062C\U00000645"},
    {0xFDBB, U"\U00000643\U00000645\U00000645"},
    {0xFDBC, U"\U00000644\U0000062C\U00000645"},
    {0xFDBD, U"\U00000646\U0000062C\U0000062D"},
    {0xFDBE, U"\U0000062C\U0000062D\U0000064A"},
    {0xFDBF, U"\U0000062D\U0000062C\U0000064A"},
    {0xFDC0, U"\U00000645\U0000062C\U0000064A"},
    {0xFDC1, U"\U00000641\U00000645\U0000064A"},
    {0xFDC2, U"\U00000628\U0000062D\U0000064A"},
    {0xFDC3, U"\U00000643\U00000645\U00000645"},
    {0xFDC4, U"\U00000639\U0000062C\U00000645"},
    {0xFDC5, U"\U00000635\U00000645\U00000645"},
    {0xFDC6, U"\U00000633\U0000062E\U0000064A"},
    {0xFDC7, U"\U00000646\U0000062C\U0000064A"},
    {0xFDF0, U"\U00000635\U00000644\U000006D2"},
    {0xFDF1, U"\U00000642\U00000644\U000006D2"},
    {0xFDF2, U"\U00000627\U00000644\U00000644\U00000647"},
    {0xFDF3, U"\U00000627\U00000643\U00000628\U00000631"},
    {0xFDF4, U"\U00000645\U0000062D\U00000645\U0000062F"},
    {0xFDF5, U"\U00000635\U00000644\U00000639\U00000645"},
    {0xFDF6, U"\U00000631\U00000633\U00000648\U00000644"},
    {0xFDF7, U"\U00000639\U00000644\U0000064A\U00000647"},
    {0xFDF8, U"\U00000648\U00000633\U00000644\U00000645"},
    {0xFDF9, U"\U00000635\U00000644\U00000649"},
    {0xFDFA, U"\U00000635\U00000644\U00000649\U00000020\U00000627\U00000644\U00000644\U00000647\U00000020\U00000639\U00000644\U0000064A\U00000647\U00000020\U00000648\U00000633\U00000644\U00000645"},
    {0xFDFB, U"\U0000062C\U00000644\U00000020\U0000062C\U00000644\U00000627\U00000644\U00000647"},
    {0xFDFC, U"\U00000631\U000006CC\U00000627\U00000644"},
    {0xFE70, U"\U0000064B"},
    {0xFE71, U"\U0000064B"},
    {0xFE72, U"\U0000064C"},
    {0xFE74, U"\U0000064D"},
    {0xFE76, U"\U0000064E"},
    {0xFE77, U"\U0000064E"},
    {0xFE78, U"\U0000064F"},
    {0xFE79, U"\U0000064F"},
    {0xFE7A, U"\U00000650"},
    {0xFE7B, U"\U00000650"},
    {0xFE7C, U"\U00000651"},
    {0xFE7D, U"\U00000651"},
    {0xFE7E, U"\U00000652"},
    {0xFE7F, U"\U00000652"},
    {0xFE80, U"\U00000621"},
    {0xFE81, U"\U00000622"},
    {0xFE82, U"\U00000622"},
    {0xFE83, U"\U00000623"},
    {0xFE84, U"\U00000623"},
    {0xFE85, U"\U00000624"},
    {0xFE86, U"\U00000624"},
    {0xFE87, U"\U00000625"},
    {0xFE88, U"\U00000625"},
    {0xFE89, U"\U00000626"},
    {0xFE8A, U"\U00000626"},
    {0xFE8B, U"\U00000626"},
    {0xFE8C, U"\U00000626"},
    {0xFE8D, U"\U00000627"},
    {0xFE8E, U"\U00000627"},
    {0xFE8F, U"\U00000628"},
    {0xFE90, U"\U00000628"},
    {0xFE91, U"\U00000628"},
    {0xFE92, U"\U00000628"},
    {0xFE93, U"\U00000629"},
    {0xFE94, U"\U00000629"},
    {0xFE95, U"\U0000062A"},
    {0xFE96, U"\U0000062A"},
    {0xFE97, U"\U0000062A"},
    {0xFE98, U"\U0000062A"},
    {0xFE99, U"\U0000062B"},
    {0xFE9A, U"\U0000062B"},
    {0xFE9B, U"\U0000062B"},
    {0xFE9C, U"\U0000062B"},
    {0xFE9D, U"\U0000062C"},
    {0xFE9E, U"\U0000062C"},
    {0xFE9F, U"\U0000062C"},
    {0xFEA0, U"\U0000062C"},
    {0xFEA1, U"\U0000062D"},
    {0xFEA2, U"\U0000062D"},
    {0xFEA3, U"\U0000062D"},
    {0xFEA4, U"\U0000062D"},
    {0xFEA5, U"\U0000062E"},
    {0xFEA6, U"\U0000062E"},
    {0xFEA7, U"\U0000062E"},
    {0xFEA8, U"\U0000062E"},
    {0xFEA9, U"\U0000062F"},
    {0xFEAA, U"\U0000062F"},
    {0xFEAB, U"\U00000630"},
    {0xFEAC, U"\U00000630"},
    {0xFEAD, U"\U00000631"},
    {0xFEAE, U"\U00000631"},
    {0xFEAF, U"\U00000632"},
    {0xFEB0, U"\U00000632"},
    {0xFEB1, U"\U00000633"},
    {0xFEB2, U"\U00000633"},
    {0xFEB3, U"\U00000633"},
    {0xFEB4, U"\U00000633"},
    {0xFEB5, U"\U00000634"},
    {0xFEB6, U"\U00000634"},
    {0xFEB7, U"\U00000634"},
    {0xFEB8, U"\U00000634"},
    {0xFEB9, U"\U00000635"},
    {0xFEBA, U"\U00000635"},
    {0xFEBB, U"\U00000635"},
    {0xFEBC, U"\U00000635"},
    {0xFEBD, U"\U00000636"},
    {0xFEBE, U"\U00000636"},
    {0xFEBF, U"\U00000636"},
    {0xFEC0, U"\U00000636"},
    {0xFEC1, U"\U00000637"},
    {0xFEC2, U"\U00000637"},
    {0xFEC3, U"\U00000637"},
    {0xFEC4, U"\U00000637"},
    {0xFEC5, U"\U00000638"},
    {0xFEC6, U"\U00000638"},
    {0xFEC7, U"\U00000638"},
    {0xFEC8, U"\U00000638"},
    {0xFEC9, U"\U00000639"},
    {0xFECA, U"\U00000639"},
    {0xFECB, U"\U00000639"},
    {0xFECC, U"\U00000639"},
    {0xFECD, U"\U0000063A"},
    {0xFECE, U"\U0000063A"},
    {0xFECF, U"\U0000063A"},
    {0xFED0, U"\U0000063A"},
    {0xFED1, U"\U00000641"},
    {0xFED2, U"\U00000641"},
    {0xFED3, U"\U00000641"},
    {0xFED4, U"\U00000641"},
    {0xFED5, U"\U00000642"},
    {0xFED6, U"\U00000642"},
    {0xFED7, U"\U00000642"},
    {0xFED8, U"\U00000642"},
    {0xFED9, U"\U00000643"},
    {0xFEDA, U"\U00000643"},
    {0xFEDB, U"\U00000643"},
    {0xFEDC, U"\U00000643"},
    {0xFEDD, U"\U00000644"},
    {0xFEDE, U"\U00000644"},
    {0xFEDF, U"\U00000644"},
    {0xFEE0, U"\U00000644"},
    {0xFEE1, U"\U00000645"},
    {0xFEE2, U"\U00000645"},
    {0xFEE3, U"\U00000645"},
    {0xFEE4, U"\U00000645"},
    {0xFEE5, U"\U00000646"},
    {0xFEE6, U"\U00000646"},
    {0xFEE7, U"\U00000646"},
    {0xFEE8, U"\U00000646"},
    {0xFEE9, U"\U00000647"},
    {0xFEEA, U"\U00000647"},
    {0xFEEB, U"\U00000647"},
    {0xFEEC, U"\U00000647"},
    {0xFEED, U"\U00000648"},
    {0xFEEE, U"\U00000648"},
    {0xFEEF, U"\U00000649"},
    {0xFEF0, U"\U00000649"},
    {0xFEF1, U"\U0000064A"},
    {0xFEF2, U"\U0000064A"},
    {0xFEF3, U"\U0000064A"},
    {0xFEF4, U"\U0000064A"},
    {0xFEF5, U"\U00000644\U00000622"},
    {0xFEF6, U"\U00000644\U00000622"},
    {0xFEF7, U"\U00000644\U00000623"},
    {0xFEF8, U"\U00000644\U00000623"},
    {0xFEF9, U"\U00000644\U00000625"},
    {0xFEFA, U"\U00000644\U00000625"},
    {0xFEFB, U"\U00000644\U00000627"},
    {0xFEFC, U"\U00000644\U00000627"},
}};

}  // namespace qasida::detail
