#!/usr/bin/env python3
"""Regenerates include/veritag/resources_data.hpp from resources/."""
import pathlib

root = pathlib.Path(__file__).resolve().parent.parent
files = [
    ("stopwords", "stopwords.txt"),
    ("easy_words", "easy_words.txt"),
    ("abbreviations", "abbreviations.txt"),
    ("ad_domains", "ad_domains.txt"),
    ("demo_dictionary", "demo.dic"),
    ("tag_groups", "tag_groups.json"),
]

out = [
    "#pragma once",
    "",
    "// Generated by tools/embed_resources.py from resources/. Do not edit.",
    "",
    "#include <string_view>",
    "",
    "namespace veritag::resources {",
    "",
]
for name, fname in files:
    text = (root / "resources" / fname).read_text()
    out.append(f'inline constexpr std::string_view {name} = R"veritag({text})veritag";')
    out.append("")
out.append("}  // namespace veritag::resources")
(root / "include" / "veritag" / "resources_data.hpp").write_text("\n".join(out) + "\n")
