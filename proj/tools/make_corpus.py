#!/usr/bin/env python3
# Copyright 2026 The IRF Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Generates the bundled synthetic movie corpus and the matching workspace
entities.

    python3 tools/make_corpus.py data/

Output is deterministic; rerunning overwrites data/corpus.json and the
entity section of data/workspace.json.
"""

import json
import pathlib
import random
import sys

SEED = 20261018

GENRES = {
    "action": ["action", "action movies", "action films"],
    "comedy": ["comedy", "comedies", "funny movies", "funny films"],
    "drama": ["drama", "dramas"],
    "horror": ["horror", "horror movies", "scary movies", "scary films"],
    "romance": ["romance", "romantic movies", "romances", "love stories"],
    "sci-fi": ["sci-fi", "science fiction", "scifi"],
    "thriller": ["thriller", "thrillers"],
    "animation": ["animation", "animated movies", "cartoons"],
    "documentary": ["documentary", "documentaries"],
    "western": ["western", "westerns"],
}

ACTORS = [
    "ana lima", "bruno keller", "chiara vento", "dev raman", "elena soto",
    "farid haddad", "greta lind", "hiro tanaka", "ines moreau", "jonas berg",
    "kofi mensah", "lena novak", "marco rossi", "nadia petrov", "oscar quint",
    "priya nair",
]

DIRECTORS = [
    "alma reyes", "boris volkov", "clara stein", "diego ferro",
    "emi sato", "felix hart", "gloria mendes", "henrik dahl",
]

ADJECTIVES = [
    "crimson", "silent", "golden", "broken", "hidden", "frozen", "electric",
    "velvet", "hollow", "distant", "burning", "paper", "iron", "lunar",
    "wandering", "midnight",
]

NOUNS = [
    "harbor", "orchard", "signal", "lantern", "canyon", "frontier", "mirror",
    "garden", "circuit", "tide", "compass", "meridian", "quarry", "archive",
    "carousel", "estuary",
]

N_ITEMS = 60
N_USERS = 10


def title_case(words):
    return " ".join(w.capitalize() for w in words.split())


def article(word):
    return "An" if word[0] in "aeiou" else "A"


def make_items(rng):
    titles = [f"{a} {n}" for a in ADJECTIVES for n in NOUNS]
    rng.shuffle(titles)
    genres = list(GENRES)
    items = []
    for i in range(N_ITEMS):
        # Every genre appears at least three times.
        primary = genres[i % len(genres)]
        item_genres = {primary}
        if rng.random() < 0.4:
            item_genres.add(rng.choice(genres))
        actors = rng.sample(ACTORS, 2)
        director = rng.choice(DIRECTORS)
        features = (
            [{"category": "genre", "value": g} for g in sorted(item_genres)]
            + [{"category": "actor", "value": a} for a in sorted(actors)]
            + [{"category": "director", "value": director}]
        )
        item = {
            "item_id": f"i{i + 1:02d}",
            "title": title_case(titles[i]),
            "features": features,
        }
        if (i + 1) % 7 != 0:
            item["description"] = (
                f"{article(sorted(item_genres)[0])} {' and '.join(sorted(item_genres))} film directed by "
                f"{title_case(director)}, starring {title_case(actors[0])} "
                f"and {title_case(actors[1])}."
            )
        items.append(item)
    return items


def make_users(rng, items):
    by_genre = {}
    for item in items:
        for f in item["features"]:
            if f["category"] == "genre":
                by_genre.setdefault(f["value"], []).append(item["item_id"])
    genres = list(GENRES)
    users = []
    base_ts = 1_790_000_000
    for u in range(N_USERS):
        if u == 0:
            # Pure comedy history.
            pool = sorted(set(by_genre["comedy"]))
            history_ids = rng.sample(pool, min(5, len(pool)))
        else:
            liked = rng.sample(genres, 2)
            pool = sorted({i for g in liked for i in by_genre[g]})
            size = rng.randint(3, min(15, len(pool)))
            history_ids = rng.sample(pool, size)
        history = []
        for k, item_id in enumerate(history_ids):
            entry = {"item": item_id}
            if rng.random() < 0.8:
                entry["score"] = rng.randint(3, 5)
            if rng.random() < 0.8:
                entry["timestamp"] = base_ts + 86400 * (u * 20 + k)
            history.append(entry)
        users.append({"user_id": f"u{u + 1:02d}", "history": history})
    return users


def entities():
    return {
        "genre": GENRES,
        "actor": {a: [a.split()[1]] for a in ACTORS},
        "director": {d: [d.split()[1]] for d in DIRECTORS},
    }


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data")
    rng = random.Random(SEED)
    items = make_items(rng)
    users = make_users(rng, items)
    (out / "corpus.json").write_text(
        json.dumps({"items": items, "users": users}, indent=2) + "\n")

    ws_path = out / "workspace.json"
    ws = json.loads(ws_path.read_text()) if ws_path.exists() else {"intents": {}}
    ordinal = ws.get("entities", {}).get("ordinal")
    ws["entities"] = entities()
    if ordinal is not None:
        ws["entities"]["ordinal"] = ordinal
    ws_path.write_text(json.dumps(ws, indent=2) + "\n")


if __name__ == "__main__":
    main()
