#!/usr/bin/env python3
"""Build the object-location knowledge base asset.

Emits src/pickplace/data/object_locations.tsv: one tab-separated
(object, located, container) triple per line, grouped by object with the
preferred container first.  The placement game draws its targets from
objects whose first container is an open receptacle in one of its rooms;
the rest of the table only enriches the query module's vocabulary.

Run from the repository root:  python scripts/build_kb.py
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from pickplace.games import decor  # noqa: E402

OUT_PATH = ROOT / "src" / "pickplace" / "data" / "object_locations.tsv"

# (adjectives, base nouns, containers preferred-first); empty adjectives
# means the bare nouns are the object names
Group = tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]]

GROUPS: list[Group] = [
    # corridor
    (("white", "black", "blue", "brown", "grey", "green"), ("coat",), ("coat hanger", "wardrobe")),
    ((), ("raincoat", "overcoat", "windbreaker", "parka", "anorak", "duffle coat"), ("coat hanger", "wardrobe")),
    (("denim", "leather", "winter", "quilted"), ("jacket",), ("coat hanger", "wardrobe")),
    ((), ("straw hat", "top hat", "baseball cap", "woolly hat", "sun hat", "felt hat", "beret", "fedora", "bowler hat", "flat cap"), ("hat rack", "hat box")),
    (("door", "car", "brass", "spare", "garage", "mailbox", "office", "shed"), ("key",), ("key holder",)),
    (("black", "red", "blue", "folding", "golf"), ("umbrella",), ("umbrella stand",)),
    ((), ("walking cane", "walking stick"), ("umbrella stand",)),
    ((), ("leather shoes", "running shoes", "hiking boots", "rain boots", "slippers", "sandals", "trainers", "flip flops", "clogs", "loafers"), ("shoe rack", "shoe cabinet")),
    ((), ("leather gloves", "woollen gloves", "mittens"), ("wall shelf", "glove box")),
    ((), ("dog leash", "sunglasses", "torch", "bicycle helmet"), ("wall shelf",)),
    # kitchen
    ((), ("apple", "orange", "banana", "pear", "peach", "plum", "lemon", "lime", "tomato", "cucumber", "carrot", "onion", "potato", "lettuce", "cabbage", "broccoli", "grapefruit", "melon", "avocado"), ("fridge", "fruit bowl")),
    ((), ("milk carton", "butter", "cheese", "yoghurt pot", "egg carton", "orange juice", "apple juice", "soda can", "mineral water", "salami", "ham", "bacon", "sausages", "fish fillet", "chicken breast"), ("fridge",)),
    ((), ("flour bag", "sugar bag", "salt shaker", "pepper mill", "rice bag", "pasta box", "cereal box", "oat box", "biscuit tin", "cracker box", "tea tin", "coffee jar", "cocoa tin", "honey jar", "jam jar", "peanut butter jar", "olive oil bottle", "vinegar bottle", "soy sauce bottle", "ketchup bottle", "mustard jar", "mayonnaise jar", "tomato sauce jar", "soup can", "bean can", "tuna can", "corn can", "noodle pack", "lentil bag", "chickpea can"), ("kitchen cupboard", "pantry shelf")),
    ((), ("fork", "spoon", "butter knife", "teaspoon", "tablespoon", "ladle", "spatula", "whisk", "tongs", "peeler", "grater", "can opener", "corkscrew", "chopsticks", "pizza cutter", "measuring cup", "measuring spoon", "bottle opener"), ("cutlery drawer",)),
    ((), ("dinner plate", "side plate", "soup bowl", "cereal bowl", "mug", "teacup", "drinking glass", "wine glass", "saucer", "serving dish", "teapot", "coffee pot", "salad bowl", "pitcher", "gravy boat", "sugar bowl"), ("kitchen cupboard", "china cabinet")),
    ((), ("bread loaf", "baguette", "bagel", "muffin", "croissant", "cutting board", "bread knife"), ("counter", "bread bin")),
    ((), ("banana peel", "apple core", "candy wrapper", "empty bottle", "crumpled napkin"), ("trash can",)),
    ((), ("oven mitt", "tea towel", "apron"), ("counter", "kitchen hook")),
    # bedroom
    (("white", "black", "blue", "red", "green", "grey", "brown", "yellow"), ("shirt", "t-shirt", "jumper", "sweater"), ("chest of drawers", "airing cupboard")),
    ((), ("cardigan", "blouse", "hoodie", "pullover", "polo shirt", "tank top"), ("wardrobe", "airing cupboard")),
    ((), ("blue jeans", "black jeans", "corduroy trousers", "linen trousers", "chino trousers", "tracksuit bottoms", "leggings", "denim shorts"), ("chest of drawers", "airing cupboard")),
    ((), ("summer dress", "evening dress", "cocktail dress", "pleated skirt", "suit jacket", "blazer", "waistcoat", "tie", "bow tie", "belt"), ("wardrobe",)),
    ((), ("woollen socks", "cotton socks", "ankle socks", "dress socks", "tights", "boxer shorts", "undershirt", "thermal underwear"), ("chest of drawers", "sock drawer")),
    ((), ("pyjamas", "nightgown", "dressing gown"), ("bed", "linen closet")),
    ((), ("pillow", "duvet", "quilt", "bedspread", "electric blanket"), ("bed",)),
    ((), ("alarm clock", "reading lamp", "eyeglasses", "book light", "earplugs", "sleep mask", "hand cream", "lip balm"), ("nightstand",)),
    ((), ("notebook", "pencil", "ballpoint pen", "fountain pen", "eraser", "ruler", "stapler", "paper clips", "sticky notes", "highlighter", "scissors", "envelope", "notepad", "sketchbook"), ("desk", "desk drawer")),
    ((), ("teddy bear", "toy car", "toy train", "building blocks", "jigsaw puzzle", "doll", "action figure", "toy dinosaur", "rubber ball", "spinning top", "yo-yo", "marble bag", "toy robot", "kite"), ("toy box", "toy shelf")),
    ((), ("perfume bottle", "makeup bag", "lipstick", "compact mirror", "nail polish", "necklace", "bracelet", "earrings", "wristwatch", "hair clip"), ("dressing table", "jewellery box")),
    # bathroom
    ((), ("toothbrush", "toothpaste", "dental floss", "mouthwash"), ("medicine cabinet", "toiletry bag")),
    ((), ("aspirin bottle", "vitamin bottle", "cough syrup", "thermometer", "bandage roll", "plaster box", "antiseptic cream", "eye drops", "cotton swabs", "cotton balls", "tweezers", "nail clippers"), ("medicine cabinet", "first aid kit")),
    ((), ("bath towel", "hand towel", "guest towel", "beach towel", "washcloth", "face towel"), ("towel rack", "linen closet")),
    ((), ("soap bar", "hand soap", "shaving cream", "razor", "shaving brush", "pumice stone"), ("wash basin",)),
    ((), ("shampoo bottle", "conditioner bottle", "shower gel", "bubble bath", "bath salts", "loofah", "bath sponge", "rubber duck"), ("bathtub", "shower caddy")),
    ((), ("comb", "hair dryer", "curling iron", "hair gel", "hairspray"), ("bathroom shelf", "vanity drawer")),
    ((), ("toilet paper pack", "air freshener", "tissue box"), ("bathroom shelf",)),
    ((), ("dirty shirt", "dirty socks", "damp towel"), ("laundry hamper", "washing machine")),
    # living room
    ((), ("cushion", "throw pillow", "lap blanket", "throw blanket"), ("sofa", "armchair")),
    ((), ("remote control", "game controller", "tv guide"), ("tv stand", "media shelf")),
    ((), ("novel", "paperback", "cookbook", "atlas", "dictionary", "encyclopedia", "poetry book", "comic book", "photo album", "scrapbook", "travel guide"), ("bookshelf",)),
    ((), ("magazine", "newspaper", "catalogue", "crossword book"), ("magazine rack", "letter tray")),
    ((), ("coaster set", "scented candle", "tea light", "flower vase", "chess set", "playing cards", "dominoes set", "board game"), ("coffee table", "display cabinet")),
    ((), ("table lamp", "reading glasses", "picture frame", "potted plant"), ("side table",)),
    ((), ("dvd case", "cd case", "vinyl record", "headphones", "portable speaker"), ("tv stand", "dvd rack")),
    # laundry room
    ((), ("detergent bottle", "fabric softener", "laundry powder", "stain remover", "bleach bottle"), ("work table", "utility cupboard")),
    ((), ("clothes pegs", "peg bag", "lint roller", "sewing kit", "measuring tape", "ironing spray"), ("bench", "sewing box")),
    ((), ("wet shirt", "wet towel", "wet socks"), ("clothes line", "airing cupboard")),
    ((), ("dirty jeans", "dirty t-shirt", "dirty pillowcase", "muddy trousers", "sweaty jersey"), ("washing machine", "laundry bag")),
    ((), ("folded sheets", "folded towels", "clean linen", "pillowcase", "tablecloth", "cloth napkins"), ("bench", "linen closet")),
    # query-only vocabulary: preferred containers never appear in a
    # placement room, so these objects never become targets
    ((), ("screwdriver", "hammer", "wrench", "pliers", "power drill", "hand saw", "tape measure", "spirit level", "paintbrush", "sandpaper", "box of nails", "box of screws"), ("toolbox", "tool cabinet")),
    ((), ("garden trowel", "pruning shears", "watering can", "flower pot", "seed packets", "garden gloves"), ("garden shelf", "potting bench")),
    ((), ("folder", "binder", "printer paper", "ink cartridge", "letter opener", "rubber stamp", "hole punch", "paperweight", "desk organizer", "business cards"), ("writing desk", "filing cabinet")),
    ((), ("tennis racket", "tennis ball", "football", "basketball", "yoga mat", "skipping rope", "dumbbell"), ("equipment rack", "gym locker")),
    ((), ("sheet music", "guitar pick", "metronome", "violin bow"), ("music stand", "instrument case")),
    ((), ("picnic blanket", "thermos flask", "cooler bag"), ("patio table", "picnic basket")),
    ((), ("dinner napkins", "napkin rings", "serving tray", "cake stand", "candlesticks", "place mats", "salt cellar", "trivet"), ("sideboard", "china cabinet")),
    ((), ("card deck", "poker chips", "dice set", "darts set"), ("games cupboard", "display cabinet")),
    ((), ("red wine bottle", "white wine bottle", "champagne bottle", "whisky bottle", "beer bottle", "gin bottle"), ("drinks cabinet", "wine rack")),
    ((), ("dog bowl", "cat toy", "pet brush", "dog biscuits"), ("pet basket", "utility cupboard")),
    ((), ("dustpan", "scrubbing brush", "window cleaner", "furniture polish"), ("cleaning caddy", "utility cupboard")),
]


def expand() -> list[tuple[str, tuple[str, ...]]]:
    entries: list[tuple[str, tuple[str, ...]]] = []
    for adjectives, nouns, containers in GROUPS:
        for noun in nouns:
            if adjectives:
                entries.extend((f"{adj} {noun}", containers) for adj in adjectives)
            else:
                entries.append((noun, containers))
    return entries


def open_receptacle_names() -> set[str]:
    return {
        name
        for specs in decor.PLACEMENT_ROOMS.values()
        for name, _, style in specs
        if style in (decor.OPEN, decor.SURFACE)
    }


def main() -> int:
    entries = expand()
    objects = [name for name, _ in entries]
    if len(objects) != len(set(objects)):
        dupes = sorted({n for n in objects if objects.count(n) > 1})
        raise SystemExit(f"duplicate object names: {dupes}")

    receptacles = open_receptacle_names()
    placeable = [name for name, cs in entries if set(cs) & receptacles]
    furniture_names = {
        spec[0]
        for table in (decor.PLACEMENT_ROOMS.values(), decor.MAP_DECOR.values())
        for specs in table
        for spec in specs
    }
    clashes = sorted(set(objects) & furniture_names)
    if clashes:
        raise SystemExit(f"object names clash with furniture names: {clashes}")

    containers = {c for _, cs in entries for c in cs}
    names = len(set(objects)) + len(containers - set(objects))

    lines = ["# object\trelation\tcontainer"]
    for name, cs in entries:
        lines.extend(f"{name}\tlocated\t{c}" for c in cs)
    OUT_PATH.parent.mkdir(parents=True, exist_ok=True)
    OUT_PATH.write_text("\n".join(lines) + "\n", encoding="utf-8")

    print(f"objects: {len(objects)}  containers: {len(containers)}  query names: {names}")
    print(f"placeable objects: {len(placeable)}")
    print(f"wrote {OUT_PATH.relative_to(ROOT)}")
    if len(placeable) < 300:
        raise SystemExit("need at least 300 placeable objects for disjoint splits")
    return 0


if __name__ == "__main__":
    sys.exit(main())
