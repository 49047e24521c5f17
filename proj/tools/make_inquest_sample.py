# Copyright 2026 The Littext Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the bundled inquest sample (data/sample/inquests.tsv).

The rows are synthetic, written in the terse style of nineteenth-century
coroners' registers. Output is fixed by the seed.
"""

import argparse
import random

FEMALE = ["Mary", "Ann", "Sarah", "Elizabeth", "Jane", "Eliza", "Hannah",
          "Martha", "Susan", "Emma", "Harriet", "Ellen", "Catherine", "Alice",
          "Margaret", "Charlotte", "Louisa", "Emily", "Frances", "Rebecca"]
MALE = ["John", "William", "Thomas", "James", "George", "Joseph", "Henry",
        "Charles", "Samuel", "Edward", "Richard", "Robert", "Daniel",
        "Benjamin", "Frederick", "Walter", "Alfred", "Peter", "Isaac",
        "Edmund"]
SURNAMES = ["Smith", "Jones", "Brown", "Taylor", "Wilson", "Cole", "Hill",
            "Wood", "Price", "Green", "Hall", "Walker", "Hughes", "Turner",
            "Baker", "Harris", "Clarke", "Lewis", "Ward", "Parker", "Cooper",
            "Fletcher", "Mason", "Barnes", "Dobson", "Kemp", "Hodges",
            "Rowley", "Pratt", "Yates", "Lamb", "Nash", "Webb", "Pike",
            "Croft", "Ellis", "Judd", "Marsh", "Quinn", "Sayer"]

# {n} is the name, {r} the reflexive and {p} the possessive pronoun.
HOMICIDE = [
    "{n} struck with a poker.",
    "{n} struck with a hammer.",
    "{n} stabbed with a knife.",
    "{n} shot with a pistol.",
    "{n} strangled with a cord.",
    "{n} beaten with a stick.",
    "{n} kicked by a drunken man.",
    "{n} struck with a shovel.",
    "{n} stabbed with a bayonet.",
    "{n} poisoned with arsenic.",
]
SUICIDE = [
    "{n} drowned {r}.",
    "{n} hanged {r}.",
    "{n} cut {p} throat with a razor.",
    "{n} poisoned {r} with laudanum.",
    "{n} shot {r} with a fowling piece.",
    "{n} threw {r} from a bridge.",
    "{n} drowned {r} in a canal.",
    "{n} hanged {r} in a stable.",
]
ACCIDENT = [
    "{n} drowned in a pond.",
    "{n} drowned whilst bathing in the river.",
    "{n} killed by a fall from a scaffold.",
    "{n} crushed by a cart.",
    "{n} scalded by boiling water.",
    "{n} burnt by {p} clothes catching fire.",
    "{n} fell from a ladder.",
    "{n} run over by a waggon.",
    "{n} killed by a kick from a horse.",
    "{n} suffocated in a well.",
    "{n} crushed by a falling tree.",
    "{n} killed by the explosion of a boiler.",
    "{n} smothered in bed.",
    "{n} fell into a cellar.",
    "{n} struck by lightning.",
    "{n} killed by a fall of earth in a gravel pit.",
]
NATURAL = [
    "{n} died by visitation of God.",
    "{n} died of fever.",
    "{n} died of apoplexy.",
    "{n} died of consumption.",
    "{n} died from want and exposure.",
    "{n} died of disease of the heart.",
    "{n} died of convulsions.",
]
UNDETERMINED = [
    "{n} found in the river.",
    "{n} found in a ditch.",
    "{n} found on the highway.",
    "{n} found in a barn.",
]
# No proper-noun subject: the extractor skips these with a diagnostic.
UNNAMED = [
    ("A man unknown found drowned in the canal.", "Male"),
    ("A woman unknown found dead on the common.", "Female"),
    ("An infant unknown found in a privy.", "Unknown"),
    ("A man unknown found in a brick kiln.", "Male"),
]
# Several named victims in one row; only accidents, so the homicide rows
# stay one person each.
GROUPS = [
    "{a}, {b} and {c} killed by a brick wall.",
    "{a} and {b} drowned by the upsetting of a boat.",
    "{a}, {b} and {c} suffocated in a coal pit.",
    "{a} and {b} killed by the fall of a chimney.",
    "{a}, {b}, {c} and {d} drowned by the sinking of a barge.",
]

REGISTER_ROWS = [
    ("Mary Gardiner struck with hand. Homicide.", "Homicide", "Female"),
    ("Nicholas Bone, John Dayson and James Cusack killed by a brick wall. "
     "Accident.", "Accident", "Male"),
    ("Ann Fitsall suffocated and burnt. Accident.", "Accident", "Female"),
    ("Mary Roberts drowned herself. Suicide.", "Suicide", "Female"),
    ("Sarah Skyring struck with an adze. Homicide.", "Homicide", "Female"),
    ("William Blakshaw struck with a bar. Homicide.", "Homicide", "Male"),
]

COUNTS = {"Homicide": 36, "Suicide": 56, "Accident": 120, "Natural": 70,
          "Undetermined": 18}


class Names:
    def __init__(self, rng):
        self.rng = rng
        self.used = {"Mary Gardiner", "Nicholas Bone", "John Dayson",
                     "James Cusack", "Ann Fitsall", "Mary Roberts",
                     "Sarah Skyring", "William Blakshaw"}

    def person(self, gender):
        pool = FEMALE if gender == "Female" else MALE
        while True:
            name = f"{self.rng.choice(pool)} {self.rng.choice(SURNAMES)}"
            if name not in self.used:
                self.used.add(name)
                return name


def child_prefix(rng, gender):
    if rng.random() < 0.12:
        return ", a child, " if gender != "Unknown" else ", an infant, "
    return " "


def make_rows(seed):
    rng = random.Random(seed)
    names = Names(rng)
    rows = list(REGISTER_ROWS)
    for verdict, templates in [("Homicide", HOMICIDE), ("Suicide", SUICIDE),
                               ("Accident", ACCIDENT), ("Natural", NATURAL),
                               ("Undetermined", UNDETERMINED)]:
        target = COUNTS[verdict] - sum(1 for r in REGISTER_ROWS
                                       if r[1] == verdict)
        if verdict == "Undetermined":
            for text, gender in UNNAMED:
                rows.append((f"{text} {verdict}.", verdict, gender))
            target -= len(UNNAMED)
        if verdict == "Accident":
            for template in GROUPS:
                people = [names.person("Male") for _ in range(4)]
                text = template.format(a=people[0], b=people[1],
                                       c=people[2], d=people[3])
                rows.append((f"{text} {verdict}.", verdict, "Male"))
            target -= len(GROUPS)
        for _ in range(target):
            gender = rng.choice(["Female", "Male"])
            name = names.person(gender)
            template = rng.choice(templates)
            if "a child" not in template and verdict in ("Accident",
                                                         "Natural"):
                lead = child_prefix(rng, gender)
            else:
                lead = " "
            body = template.format(
                n="{n}",
                r="herself" if gender == "Female" else "himself",
                p="her" if gender == "Female" else "his")
            text = body.replace("{n} ", name + lead, 1)
            if verdict == "Natural" and gender == "Female" and \
                    rng.random() < 0.15:
                text = f"{name} died in childbed."
            rows.append((f"{text} {verdict}.", verdict, gender))
    rng.shuffle(rows)
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=1871)
    parser.add_argument("--out", default="data/sample/inquests.tsv")
    args = parser.parse_args()
    rows = make_rows(args.seed)
    with open(args.out, "w", encoding="utf-8", newline="\n") as f:
        f.write("id\ttext\tverdict\tgender\n")
        for i, (text, verdict, gender) in enumerate(rows, start=1):
            f.write(f"I{i:04d}\t{text}\t{verdict}\t{gender}\n")


if __name__ == "__main__":
    main()
