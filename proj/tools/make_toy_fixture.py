# Copyright 2026 The SemJudge Authors.
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
"""Writes the toy benchmark used by the tests.

3 initiatives x 5 generators, every pair voted on by 13 annotators, ground
profiles, six VQA items and a scripted mock backend keyed by image digest.
Output is deterministic so the checked-in copy can be regenerated at will.

    python3 tools/make_toy_fixture.py tests/data/toy
"""

import hashlib
import itertools
import json
import struct
import sys
import zlib
from pathlib import Path

GENERATORS = ["gen-a", "gen-b", "gen-c", "gen-d", "gen-e"]

INITIATIVES = [
    {
        "initiative_id": "init01",
        "prompt_text": "A lighthouse keeper's last night before the light is automated.",
        "tradition": "narrative",
        "quality": {"gen-a": 5, "gen-b": 4, "gen-c": 3, "gen-d": 2, "gen-e": 1},
        "profile": (3.6, 5.4, 2.2),
    },
    {
        "initiative_id": "init02",
        "prompt_text": "The ouroboros drawn as a subway map.",
        "tradition": "alchemical",
        "quality": {"gen-a": 4, "gen-b": 5, "gen-c": 2, "gen-d": 3, "gen-e": 1},
        "profile": (3.2, 6.2, 3.2),
    },
    {
        "initiative_id": "init03",
        "prompt_text": "A still life of a lemon, peeled halfway, in Dutch Golden Age style.",
        "tradition": "vanitas",
        "quality": {"gen-a": 5, "gen-b": 3, "gen-c": 4, "gen-d": 1, "gen-e": 2},
        "profile": (6.4, 3.4, 1.8),
    },
]

SIZE = 16


def png(rgb):
    """A SIZE x SIZE solid-colour RGB PNG."""
    def chunk(kind, data):
        body = kind + data
        return struct.pack(">I", len(data)) + body + struct.pack(">I", zlib.crc32(body))

    row = b"\x00" + bytes(rgb) * SIZE
    ihdr = struct.pack(">IIBBBBB", SIZE, SIZE, 8, 2, 0, 0, 0)
    return (b"\x89PNG\r\n\x1a\n" + chunk(b"IHDR", ihdr)
            + chunk(b"IDAT", zlib.compress(row * SIZE, 9)) + chunk(b"IEND", b""))


def node(node_id, sign, obj, interp, grounds, key, relation=None, box=None):
    out = {"node_id": node_id,
           "semiosis": {"sign_description": sign, "inferred_object": obj,
                        "interpretant": interp, key: grounds}}
    if relation is not None:
        out["relation_to_root"] = relation
    if box is not None:
        out["bounding_box"] = box
    return out


def prompt_hsg():
    key = "expected_grounds"
    return {"hsg_root": dict(
        node("p0", "the prompt as a whole", "the requested scene", "a scene to depict",
             ["symbolic", "iconic"], key),
        children=[
            node("p1", "the named subject", "the central figure", "who must appear",
                 ["iconic"], key, "depicts"),
            node("p2", "the stylistic cue", "a visual tradition", "how it must look",
                 ["symbolic"], key, "styles"),
            node("p3", "the implied moment", "a narrative beat", "what it must mean",
                 ["indexical"], key, "situates"),
        ])}


def artifact_hsg(tag):
    key = "grounds"
    return {"hsg_root": dict(
        node(f"{tag}0", "the whole image", "the rendered scene", "what the picture says",
             ["iconic", "symbolic"], key),
        children=[
            node(f"{tag}1", "a central shape", "the subject", "the subject is present",
                 ["iconic"], key, "depicts", [2, 2, 10, 10]),
            node(f"{tag}2", "the palette", "a tradition", "the style is legible",
                 ["symbolic"], key, "styles", [0, 0, 16, 16]),
            node(f"{tag}3", "a cast shadow", "a moment in time", "the hour is implied",
                 ["indexical"], key, "situates", [4, 8, 12, 14]),
        ])}


def jsonl(path, records):
    with open(path, "w", encoding="utf-8") as f:
        for r in records:
            f.write(json.dumps(r, ensure_ascii=False, sort_keys=True) + "\n")


def main(out):
    out = Path(out)
    (out / "images").mkdir(parents=True, exist_ok=True)
    initiatives, tasks, profiles, vqa = [], [], [], []
    digests = {}
    judge_scores = {}
    for n, init in enumerate(INITIATIVES):
        iid = init["initiative_id"]
        (out / "images" / iid).mkdir(exist_ok=True)
        images = []
        for m, gen in enumerate(GENERATORS):
            data = png((40 * m + 20, 60 * n + 30, 200 - 30 * m))
            rel = f"{iid}/{gen}.png"
            (out / "images" / rel).write_bytes(data)
            digest = hashlib.sha256(data).hexdigest()
            digests[(iid, gen)] = digest
            images.append({"image_id": gen, "model_id": gen, "file": rel})
            # The scripted judge disagrees with the annotators on one pair.
            score = init["quality"][gen]
            if iid == "init03" and gen in ("gen-b", "gen-c"):
                score = 7 - score
            judge_scores[digest] = score
            icn = 2.0 + 0.8 * init["quality"][gen]
            profiles.append({"initiative_id": iid, "image_id": gen,
                             "icn": round(icn, 1), "idx": 4.0, "sym": 3.0})
        initiatives.append({"initiative_id": iid, "prompt_text": init["prompt_text"],
                            "tradition": init["tradition"], "images": images})
        icn, sym, idx = init["profile"]
        profiles.append({"initiative_id": iid, "icn": icn, "idx": idx, "sym": sym})

        for k, (a, b) in enumerate(itertools.combinations(GENERATORS, 2)):
            if (k + n) % 2:
                a, b = b, a
            a_wins = init["quality"][a] > init["quality"][b]
            strong = 9 if k % 4 == 3 else 10
            votes = []
            for v in range(13):
                pick_winner = v < strong
                choice = "A" if pick_winner == a_wins else "B"
                votes.append({"annotator_id": f"ann{(v + n) % 15:02d}", "choice": choice})
            tasks.append({"task_id": f"{iid}__{a}__{b}", "initiative_id": iid,
                          "image_a": a, "image_b": b, "human_votes": votes})

        ranked = sorted(GENERATORS, key=lambda g: -init["quality"][g])
        vqa.append({"question_id": f"{iid}-q1", "initiative_id": iid,
                    "image_ids": [ranked[0]],
                    "stem": "What does the region in bbox_1 most plausibly signify?",
                    "choices": {"A": f"{iid} mourning", "B": f"{iid} renewal",
                                "C": f"{iid} vigilance", "D": f"{iid} plenty"},
                    "answer": "ABCD"[n % 4], "bboxes": {"bbox_1": [2, 2, 10, 10]}})
        vqa.append({"question_id": f"{iid}-q2", "initiative_id": iid,
                    "image_ids": [ranked[0], ranked[1]],
                    "stem": "Why is image a the stronger reading of the request?",
                    "choices": ["it keeps the narrative cue", "it is brighter",
                                "it is larger", "it has more figures"],
                    "answer": "A"})

    answer_texts = []
    for item in vqa:
        choices = item["choices"]
        if isinstance(choices, dict):
            answer_texts.append(choices[item["answer"]])
        else:
            answer_texts.append(choices["ABCD".index(item["answer"])])

    jsonl(out / "initiatives.jsonl", initiatives)
    jsonl(out / "tasks_2afc.jsonl", tasks)
    jsonl(out / "profiles.jsonl", profiles)
    jsonl(out / "vqa.jsonl", vqa)

    mock = {"rules": [
        {"when": {"stage": "prompt_hsg"}, "respond_json": prompt_hsg()},
        {"when": {"stage": "artifact_hsg"},
         "artifact_hsgs_by_image": {"default": artifact_hsg("n")}},
        {"when": {"stage": "judgment"},
         "prefer_images": judge_scores,
         "discussion": "Image {winner} carries the requested meaning; see n1 and n3."},
        {"when": {"stage": "vqa"}, "answer_by_choice_text": answer_texts},
    ]}
    with open(out / "mock.json", "w", encoding="utf-8") as f:
        json.dump(mock, f, indent=1, sort_keys=True)
        f.write("\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/toy")
