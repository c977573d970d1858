#!/usr/bin/env python3
"""Regenerates the bundled fixture data under data/.

data/mini      hand-authored mini-corpus: two published project contexts
               (Slow Down, Bull and the case-study project) plus neighbor
               contexts and element records written to resemble them.
data/corpus55  seeded synthetic corpus with 55 projects x 61 variables, used
               for ingestion counts and end-to-end timing.
data/replay    the published aggregated confusion counts.

Output is deterministic; rerunning must produce byte-identical files.
"""

import csv
import io
import json
import random
from pathlib import Path

ROOT = Path(__file__).resolve().parents[2] / "data"
N_VARS = 61

AAAAA = "Aaaaa! – A Reckless Disregard for Gravity"

# 1-based true variables per project.
MINI_CONTEXTS = {
    "Slow Down, Bull": [1, 2, 6, 8, 9, 13, 19, 22, 24, 27, 28, 29, 33, 39, 42, 46, 57, 59],
    "Jetpack High": [1, 2, 8, 9, 13, 17, 19, 22, 24, 27, 28, 29, 33, 39, 42, 46, 57, 59],
    "Vanishing Point": [1, 2, 6, 8, 9, 13, 19, 22, 27, 28, 29, 33, 39, 42, 46, 47, 57, 59],
    "Catlateral Damage": [1, 2, 8, 9, 13, 19, 22, 24, 27, 28, 30, 33, 39, 42, 46, 47, 51, 59],
    "Ashes of the Singularity": [1, 3, 4, 5, 7, 11, 12, 13, 20, 23, 27, 30, 33, 39, 40, 46, 56, 61],
    "Baldurs Gate Enhanced Edition": [1, 2, 3, 4, 5, 7, 11, 12, 13, 20, 23, 27, 29, 33, 35, 41, 46, 47, 54, 59],
    "Natural Selection 2": [1, 2, 3, 4, 7, 11, 13, 16, 20, 23, 24, 27, 30, 33, 39, 40, 46, 51, 56, 61],
    "Anomaly Warzone Earth": [1, 2, 3, 4, 5, 7, 11, 12, 13, 20, 23, 27, 30, 33, 39, 42, 46, 49, 50, 56, 59],
    AAAAA: [1, 2, 3, 5, 7, 11, 12, 19, 23, 27, 30, 33, 39, 40, 46, 51, 59],
    "Prune": [1, 2, 7, 9, 19, 22, 28, 30, 33, 39, 42, 49, 50, 57, 59],
    "Offworld Trading Company": [1, 2, 3, 4, 20, 23, 27, 29, 32, 39, 40, 46, 56, 61],
    "Ori and the Blind Forest": [2, 3, 4, 8, 10, 13, 14, 21, 23, 26, 29, 32, 39, 42, 43, 46, 52, 59],
    "NFL Rush Heroes & Rivals": [1, 2, 6, 20, 23, 27, 29, 32, 34, 42, 43, 44, 58, 60, 61],
    "Mini Metro": [1, 2, 7, 9, 11, 19, 22, 28, 30, 33, 39, 42, 46, 47, 48, 49, 50, 56, 57, 59],
}

TARGETS = {
    # Same variables as Slow Down, Bull under a new name: its distance-0 twin.
    "slow_down_bull_twin.csv": ("Slow Down, Bull (new project)", MINI_CONTEXTS["Slow Down, Bull"]),
    "case_study.csv": (
        "Case Study Project",
        [1, 2, 3, 4, 5, 7, 11, 12, 13, 20, 23, 27, 30, 33, 39, 42, 46, 55, 56, 59],
    ),
}

A, B, N, W, G = ("Ashes of the Singularity", "Baldurs Gate Enhanced Edition", "Natural Selection 2",
                 "Anomaly Warzone Earth", AAAAA)
SDB, JH, VP, CD = "Slow Down, Bull", "Jetpack High", "Vanishing Point", "Catlateral Damage"

# (game, phase, subphase, element, desc, prob)
MINI_ELEMENTS = [
    # Slow Down, Bull
    (SDB, "team", None, "team",
     "Besides me, the team for Slow Down, Bull was composed entirely of contractors (though some still had some (...)", False),
    (SDB, "activities", "preproduction", "Initial Prototyping",
     "Because the whole initial process was a bit of an experiment, we spent a long time with just me working on (...)", False),
    (SDB, "activities", "preproduction", "exploration phase",
     "We were able to iterate through a ton of different experiments, many of which were discarded failures, "
     "but which paved the path for the strongest mechanics in the game", False),
    (SDB, "characteristics", None, "expertise source",
     "In a way, the act of consulting an expert became a form of delegation, and pure brain-expertise became a (...)", False),
    (SDB, "activities", "production", "early play testing", "Play testing started later than it should have.", True),
    (SDB, "feedback", None, "initial prototyping",
     "I would switch the position of initial prototyping and early play testing. The prototype had to exist before (...)", False),
    # Vanishing Point
    (VP, "activities", "preproduction", "requirements and constraints",
     "Defined the technical constraints of the project before writing gameplay code.", False),
    (VP, "activities", "preproduction", "exploration phase", "Spent the first weeks exploring mechanics on paper.", False),
    (VP, "activities", "preproduction", "planning documentation", "Kept a short living design document.", False),
    (VP, "activities", "preproduction", "milestones planning", "Milestones were set every two months.", False),
    (VP, "activities", "production", "development iterations loop", "Each iteration ended with a playable build.", False),
    (VP, "activities", "production", "local play testing", "Play testing every week with new players.", False),
    (VP, "activities", "production", "meetings", "Short weekly meetings kept everyone aligned.", False),
    (VP, "characteristics", None, "scope", "The scope grew beyond the original plan.", True),
    # Catlateral Damage
    (CD, "activities", "preproduction", "prototyping", "The first prototype was built in a week for a game jam.", False),
    (CD, "activities", "production", "development iterations loop", "Features were added in short cycles.", False),
    (CD, "activities", "production", "polish and refinements", "Polish took longer than expected.", True),
    (CD, "activities", "production", "refactoring the development", "Large parts of the jam code were rewritten.", False),
    (CD, "team", None, "small team", "A one-person team with occasional outside help.", False),
    # Jetpack High
    (JH, "activities", "preproduction", "prototyping", "Several small prototypes were tried before picking one.", False),
    (JH, "activities", "production", "design tasks", "Level design happened alongside programming.", False),
    (JH, "activities", "production", "quality assurance", "The platform holder reviewed the build before release.", False),
    (JH, "activities", "production", "build", "Final builds were produced with an automated script.", False),
    (JH, "activities", "postproduction", "users feedback", "Players reported bugs through the forum.", False),
    # Case-study neighbors
    (W, "team", None, "test team", "Beta test group from community.", False),
    (A, "team", None, "test team", "Beta testers with access to bug database.", False),
    (B, "team", None, "test team", "Outsourcing test company to check devices from different platforms.", False),
    (G, "team", None, "small team", "Small team with focused on development, not marketing.", False),
    (G, "team", None, "general team details", "Lead designer no present.", True),
    (W, "team", None, "general team details", "Lack of artists.", True),
    (N, "team", None, "general team details", "Experienced team who already worked together.", False),
    (B, "team", None, "general team details", "No need to research, team have know-hall about tasks to complete.", False),
    (A, "team", None, "general team details", "Full focused with no business meetings.", False),
    (B, "team", None, "outsourcing", "Outsourcing experienced people with technical expertise.", False),
    (W, "team", None, "outsourcing", "Outsourcing PR / marketing.", False),
    (A, "team", None, "outsourcing", "Outsourcing code and assets.", False),
    (N, "team", None, "horizontal development", "Follow a higher principle.", False),
    (N, "team", None, "horizontal development", "Everyone may vet new ideas.", False),
    (G, "characteristics", None, "development problems", "Keep the pace and not \"crunch\" (work overtime).", False),
    (N, "characteristics", None, "development problems", "Lack of proper pipeline.", True),
    (G, "characteristics", None, "development problems", "Hard to solve things by yourself.", True),
    (W, "characteristics", None, "development problems", "Cutting or reworking features.", True),
    (G, "characteristics", None, "development process details", "Lack of process or structure.", True),
    (G, "characteristics", None, "development process details", "Just code without planning.", True),
    (N, "characteristics", None, "development process details", "List of main features instead of a design document.", False),
    (N, "characteristics", None, "development process details", "Share the development with the audience.", False),
    (W, "characteristics", None, "development process details",
     "No schedule, nor milestones, nor meetings nor design document nor technical plan.", True),
    (A, "characteristics", None, "engine and tools", "Use a tool for build distribution.", False),
    (G, "characteristics", None, "engine and tools", "Learn everything from scratch.", False),
    (A, "characteristics", None, "infrastructure", "Self made engine and/or tools.", False),
    (B, "characteristics", None, "infrastructure", "Engine and/or legacy code limiting improvements.", True),
    (W, "characteristics", None, "project focus", "Focus on the team strength.", False),
    (N, "characteristics", None, "scope", "Changing scope.", True),
    (A, "characteristics", None, "scope", "Developing self engine.", False),
    (B, "activities", "preproduction", "concept", "Artists, level designers, programmers, and animators working together.", False),
    (A, "activities", "preproduction", "concept", "Set of design principles.", False),
    (W, "activities", "preproduction", "concept", "Brainstorming ideas based in a goal.", False),
    (W, "activities", "preproduction", "concept", "Align thinking before prototyping phase.", False),
    (G, "activities", "preproduction", "concept", "Research similar games.", False),
    (N, "activities", "preproduction", "concept", "Stick with the game concept since the beginning.", False),
    (G, "activities", "preproduction", "brainstorming features", "Brainstorming ideas finding \"fun factor\".", False),
    (G, "activities", "preproduction", "exploration phase",
     "Prototyping a game without polishing, trying to find a good game play.", False),
    (W, "activities", "preproduction", "exploration phase", "Heavily prototyping and testing iterations.", False),
    (A, "activities", "preproduction", "exploration phase", "Avoid making experiments in production phase.", False),
    (W, "activities", "preproduction", "pitch", "Pitch the game concept.", False),
    (G, "activities", "preproduction", "initial prototyping", "Simple prototyping to find \"fun factor\".", False),
    (A, "activities", "preproduction", "prototyping", "Game being developed in parallel with the engine.", False),
    (B, "activities", "preproduction", "requirements and constraints", "Game design documentation not updated.", True),
    (A, "activities", "preproduction", "requirements and constraints", "Define a list of features and tools.", False),
    (B, "activities", "preproduction", "requirements and constraints", "Port UI to other platform.", False),
    (A, "activities", "preproduction", "planning documentation",
     "Production plan with buffers (more time) after each milestone.", False),
    (W, "activities", "preproduction", "planning documentation", "Cutting features, making less but better.", False),
    (N, "activities", "preproduction", "milestones planning",
     "Pre-order program to raise money allowing the team continue the development.", False),
    (N, "activities", "preproduction", "milestones planning", "Early access feedback.", False),
    (N, "activities", "preproduction", "vertical slice", "Community working together creating assets.", False),
    (W, "activities", "production", "business tasks", "Market study.", False),
    (G, "activities", "production", "business tasks", "Selling directly to customers.", False),
    (N, "activities", "production", "business tasks", "Pre-order program.", False),
    (A, "activities", "production", "business tasks", "Marketing strategy.", False),
    (A, "activities", "production", "design tasks", "Procedurally generated instead of hand craft levels.", False),
    (A, "activities", "production", "design tasks", "AI specialists.", False),
    (N, "activities", "production", "development iterations loop",
     "Digital distribution allowing testers give feedback quickly and often.", False),
    (W, "activities", "production", "development iterations loop", "Heavy tested by non designers.", False),
    (A, "activities", "production", "development iterations loop",
     "Schedule iterations with buffers, that is, double or triple the time required for a task.", False),
    (G, "activities", "production", "development iterations loop",
     "Heavily focused on iterations and constant improvements in the game.", False),
    (B, "activities", "production", "development iterations loop",
     "Legacy problems being solved as the development goes on.", True),
    (A, "activities", "production", "in-house tools development",
     "Creating tools to aid developers with a new technology and avoid unknown bugs.", False),
    (N, "activities", "production", "in-house tools development",
     "Tools allowing non coders to change parameters and experiment with the game engine.", False),
    (A, "activities", "production", "in-house tools development", "The main goal is to create a new engine.", False),
    (N, "activities", "production", "in-house tools development", "Creating an IDE.", False),
    (A, "activities", "production", "in-house tools development", "Creating an Engine with experienced team.", False),
    (B, "activities", "production", "in-house tools development",
     "Creating tools to automatize tasks and processes.", False),
    (N, "activities", "production", "multi-player construction", "Specialist in multi-player development.", False),
    (W, "activities", "production", "polish and refinements", "Improving performance.", False),
    (B, "activities", "production", "professional feedback", "Getting technical feedback.", False),
    (B, "activities", "production", "refactoring the development", "Time expended with re-designs.", True),
    (B, "activities", "production", "refactoring the development", "Refactoring old code.", False),
    (A, "activities", "production", "beta testing", "Beta test group.", False),
    (W, "activities", "production", "testing", "Multi-platform testing.", False),
    (W, "activities", "production", "testing", "Delivery builds quickly to test team.", False),
    (A, "activities", "production", "beta testing", "Long time beta testing the game.", False),
    (B, "activities", "production", "testing", "Get feedback from QA with volunteers.", False),
    (N, "activities", "production", "local play testing", "Feedback from testers not used properly.", True),
    (G, "activities", "postproduction", "retrospective meeting", "Research target audience.", False),
    (N, "activities", "postproduction", "users feedback",
     "Working directly with gamers community using a on-line message board.", False),
    (W, "activities", "postproduction", "users feedback", "Game shipped for one platform first.", False),
    (G, "feedback", None, "general", "The merged view mixes two very different projects.", False),
    # Far projects
    ("Prune", "activities", "preproduction", "prototyping",
     "The first months covered prototyping, task prioritization, and play testing.", False),
    ("Prune", "characteristics", None, "project duration", "Development took about two years.", False),
    ("Prune", "activities", None, "task prioritization", "Tasks were reprioritized every week.", False),
    ("Offworld Trading Company", "activities", "production", "development iterations loop",
     "Weekly multiplayer test sessions drove the iterations.", False),
    ("Offworld Trading Company", "team", None, "general team details", "Veteran strategy game developers.", False),
    ("Offworld Trading Company", "activities", "production", "beta testing", "Early access beta ran for a year.", False),
    ("Ori and the Blind Forest", "team", None, "distributed team", "Team members worked remotely from many countries.", False),
    ("Ori and the Blind Forest", "activities", "production", "polish and refinements",
     "A long polish phase before release.", False),
    ("NFL Rush Heroes & Rivals", "characteristics", None, "licensing",
     "Working under a sports license added approval steps.", True),
    ("NFL Rush Heroes & Rivals", "activities", "production", "testing", "QA team from the publisher.", False),
    ("Mini Metro", "activities", "preproduction", "prototyping", "The first version was a small web prototype.", False),
    ("Mini Metro", "activities", "postproduction", "users feedback", "Early access players shaped the later updates.", False),
]

MINI_DICTIONARY = {
    "initial prototyping": "prototyping",
    "local play testing": "testing",
    "beta testing": "testing",
    "early play testing": "testing",
}


def context_csv(rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["game"] + [f"v{i:02d}" for i in range(1, N_VARS + 1)])
    for game, true_vars in rows:
        on = set(true_vars)
        w.writerow([game] + ["1" if i in on else "0" for i in range(1, N_VARS + 1)])
    return buf.getvalue()


def element_line(game, phase, subphase, element, desc, prob):
    rec = {"game": game, "phase": phase}
    if subphase is not None:
        rec["subphase"] = subphase
    rec.update({"element": element, "desc": desc, "prob": prob})
    return json.dumps(rec, ensure_ascii=False)


def write(path, text):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="\n")


def make_mini():
    d = ROOT / "mini"
    write(d / "contexts.csv", context_csv(MINI_CONTEXTS.items()))
    write(d / "elements.jsonl", "".join(element_line(*e) + "\n" for e in MINI_ELEMENTS))
    write(d / "dictionary.json", json.dumps(MINI_DICTIONARY, indent=2, sort_keys=True) + "\n")
    for name, (game, true_vars) in TARGETS.items():
        write(d / "targets" / name, context_csv([(game, true_vars)]))


# --- synthetic 55-project corpus ------------------------------------------

SUBPHASES = ["preproduction", "production", "postproduction"]
VERBS = ["planning", "review", "testing", "tooling", "design", "iteration", "outsourcing", "meetings",
         "documentation", "prototyping", "polish", "localization", "marketing", "analytics", "porting"]
TOPICS = ["art", "audio", "level", "network", "ui", "engine", "story", "economy", "combat", "build", "asset",
          "camera", "physics", "ai", "input", "save", "shader", "platform", "community", "release",
          "performance", "animation", "tutorial", "balance", "quest", "memory", "crash", "store", "cloud",
          "controller", "vr", "mobile", "console", "steam", "mod", "script", "editor", "pipeline", "lighting",
          "font", "dialogue", "cinematic", "trailer", "press", "publisher", "investor", "schedule", "budget",
          "hiring", "contract", "legal", "rating", "patch", "dlc", "server", "matchmaking", "telemetry",
          "accessibility", "localisation", "qa"]


def make_corpus55():
    rng = random.Random(20180331)
    keys = sorted({f"{t} {v}" for t in TOPICS for v in VERBS})
    weights = [1.0 / (1 + i) ** 0.35 for i in range(len(keys))]
    rng.shuffle(keys)

    games = [f"Synthetic Project {i:02d}" for i in range(1, 56)]
    ctx_rows = []
    lines = []
    aliases = {}
    for game in games:
        on = set()
        on.add(rng.choice([19, 20, 21]))
        on.add(rng.choice([7, 8]))
        on.add(rng.choice([22, 23]))
        on.add(rng.choice([39, 39, 36, 34]))
        on.add(rng.choice([40, 41, 42]))
        for v in range(1, N_VARS + 1):
            if v in (7, 8, 19, 20, 21, 22, 23) or v in on:
                continue
            if rng.random() < 0.22:
                on.add(v)
        ctx_rows.append((game, sorted(on)))

        count = rng.randint(24, 42)
        chosen = set()
        while len(chosen) < count:
            chosen.add(rng.choices(keys, weights)[0])
        for n, key in enumerate(sorted(chosen)):
            r = rng.random()
            if r < 0.6:
                phase, sub = "activities", rng.choice(SUBPHASES + [None])
            elif r < 0.8:
                phase, sub = "team", None
            else:
                phase, sub = "characteristics", None
            shown = key
            if rng.random() < 0.08:
                shown = key + " practice"
                aliases[shown] = key
            if rng.random() < 0.15:
                shown = shown.title()
            desc = f"{game} notes on {key} (entry {n + 1})."
            lines.append(element_line(game, phase, sub, shown, desc, rng.random() < 0.3))
        if rng.random() < 0.5:
            lines.append(element_line(game, "feedback", None, "feedback", f"{game} reviewed its extracted process.", False))

    d = ROOT / "corpus55"
    write(d / "contexts.csv", context_csv(ctx_rows))
    write(d / "elements.jsonl", "".join(l + "\n" for l in lines))
    write(d / "dictionary.json", json.dumps(dict(sorted(aliases.items())), indent=2) + "\n")


def make_replay():
    rows = [("#1", 32, 44, 285, 540), ("#2", 23, 105, 153, 620), ("#3", 10, 32, 171, 692), ("#4", 14, 19, 358, 505)]
    text = "run,tp,fp,fn,tn,sa\n" + "".join(f"{r},{tp},{fp},{fn},{tn},913\n" for r, tp, fp, fn, tn in rows)
    write(ROOT / "replay" / "table8.csv", text)


if __name__ == "__main__":
    make_mini()
    make_corpus55()
    make_replay()
