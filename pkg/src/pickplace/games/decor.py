"""Room furnishing tables.

Furniture is described as (name, article, style) rows.  Styles map onto
entity fields: "closed" and "open" are containers, "surface" is an
open-topped container rendered with "on it", "fixture" is scenery.
Listing order here is rendering order in the room description.
"""

from __future__ import annotations

from .. import world as W
from ..world import Entity

CLOSED = "closed"
OPEN = "open"
SURFACE = "surface"
FIXTURE = "fixture"

FurnitureSpec = tuple[str, str, str]


def make_furniture(room_id: str, spec: FurnitureSpec) -> Entity:
    name, article, style = spec
    if style == FIXTURE:
        return Entity(id=f"{room_id}:{name}", name=name, kind=W.FIXTURE, article=article)
    open_state = {CLOSED: False, OPEN: True, SURFACE: None}[style]
    return Entity(
        id=f"{room_id}:{name}",
        name=name,
        kind=W.CONTAINER,
        article=article,
        open=open_state,
    )


# Kitchen layouts for the two single-room object games.  The box and the
# quantified objects are inserted by the game builders at fixed positions.
ARITHMETIC_KITCHEN_FRONT: list[FurnitureSpec] = [
    ("fridge", "a", CLOSED),
    ("dining chair", "a", SURFACE),
]
ARITHMETIC_KITCHEN_BACK: list[FurnitureSpec] = [
    ("dishwasher", "a", CLOSED),
    ("trash can", "a", CLOSED),
    ("oven", "an", FIXTURE),
    ("cutlery drawer", "a", CLOSED),
    ("stove", "a", FIXTURE),
    ("kitchen cupboard", "a", CLOSED),
    ("counter", "a", SURFACE),
]

SORTING_KITCHEN_FRONT: list[FurnitureSpec] = [
    ("fridge", "a", CLOSED),
    ("counter", "a", SURFACE),
    ("dining chair", "a", SURFACE),
]
SORTING_KITCHEN_BACK: list[FurnitureSpec] = [
    ("dishwasher", "a", CLOSED),
    ("trash can", "a", CLOSED),
    ("oven", "an", FIXTURE),
    ("cutlery drawer", "a", CLOSED),
    ("stove", "a", FIXTURE),
    ("kitchen cupboard", "a", CLOSED),
]

# Rooms for the object-placement game.  Every canonical destination in the
# knowledge base that can appear in a room is open here, so a correct
# placement is always physically possible.
PLACEMENT_ROOMS: dict[str, list[FurnitureSpec]] = {
    "corridor": [
        ("shoe cabinet", "a", CLOSED),
        ("key holder", "a", SURFACE),
        ("hat rack", "a", SURFACE),
        ("coat hanger", "a", SURFACE),
        ("umbrella stand", "a", SURFACE),
        ("shoe rack", "a", SURFACE),
        ("wall shelf", "a", SURFACE),
    ],
    "kitchen": [
        ("fridge", "a", OPEN),
        ("counter", "a", SURFACE),
        ("dining chair", "a", SURFACE),
        ("trash can", "a", OPEN),
        ("cutlery drawer", "a", OPEN),
        ("kitchen cupboard", "a", OPEN),
        ("dishwasher", "a", CLOSED),
        ("oven", "an", FIXTURE),
        ("stove", "a", FIXTURE),
    ],
    "bedroom": [
        ("wardrobe", "a", OPEN),
        ("chest of drawers", "a", OPEN),
        ("bed", "a", SURFACE),
        ("nightstand", "a", SURFACE),
        ("desk", "a", SURFACE),
        ("toy box", "a", OPEN),
        ("dressing table", "a", SURFACE),
    ],
    "bathroom": [
        ("medicine cabinet", "a", OPEN),
        ("towel rack", "a", SURFACE),
        ("wash basin", "a", SURFACE),
        ("bathtub", "a", OPEN),
        ("laundry hamper", "a", OPEN),
        ("bathroom shelf", "a", SURFACE),
        ("shower", "a", FIXTURE),
        ("toilet", "a", FIXTURE),
    ],
    "living room": [
        ("sofa", "a", SURFACE),
        ("armchair", "an", SURFACE),
        ("coffee table", "a", SURFACE),
        ("bookshelf", "a", SURFACE),
        ("tv stand", "a", SURFACE),
        ("side table", "a", SURFACE),
        ("magazine rack", "a", OPEN),
    ],
    "laundry room": [
        ("washing machine", "a", OPEN),
        ("clothes drier", "a", OPEN),
        ("laundry basket", "a", OPEN),
        ("bench", "a", SURFACE),
        ("work table", "a", SURFACE),
        ("clothes line", "a", SURFACE),
    ],
}

# Fixed furnishing of every map location.  The start room additionally
# gets the box, the target room the coin, both listed first.
MAP_DECOR: dict[str, list[FurnitureSpec]] = {
    "foyer": [],
    "corridor": [
        ("shoe cabinet", "a", CLOSED),
        ("key holder", "a", SURFACE),
        ("hat rack", "a", SURFACE),
        ("coat hanger", "a", SURFACE),
        ("umbrella stand", "a", SURFACE),
    ],
    "kitchen": [
        ("fridge", "a", CLOSED),
        ("counter", "a", SURFACE),
        ("dining chair", "a", SURFACE),
        ("dishwasher", "a", CLOSED),
        ("trash can", "a", CLOSED),
        ("oven", "an", FIXTURE),
        ("cutlery drawer", "a", CLOSED),
        ("stove", "a", FIXTURE),
        ("kitchen cupboard", "a", CLOSED),
    ],
    "pantry": [
        ("pantry shelf", "a", SURFACE),
        ("storage bin", "a", CLOSED),
    ],
    "living room": [
        ("sofa", "a", SURFACE),
        ("armchair", "an", SURFACE),
        ("coffee table", "a", SURFACE),
        ("bookshelf", "a", SURFACE),
    ],
    "bedroom": [
        ("bed", "a", SURFACE),
        ("wardrobe", "a", CLOSED),
        ("nightstand", "a", SURFACE),
    ],
    "bathroom": [
        ("towel rack", "a", SURFACE),
        ("wash basin", "a", SURFACE),
        ("bathroom cabinet", "a", CLOSED),
    ],
    "laundry room": [
        ("bench", "a", SURFACE),
        ("washing machine", "a", CLOSED),
        ("work table", "a", SURFACE),
        ("laundry basket", "a", SURFACE),
        ("clothes drier", "a", CLOSED),
    ],
    "backyard": [
        ("patio table", "a", SURFACE),
        ("barbecue", "a", CLOSED),
    ],
    "garage": [
        ("workbench", "a", SURFACE),
        ("tool cabinet", "a", CLOSED),
    ],
    "sideyard": [
        ("garden bench", "a", SURFACE),
    ],
    "driveway": [],
    "street": [
        ("mailbox", "a", CLOSED),
    ],
    "alley": [
        ("dumpster", "a", CLOSED),
    ],
    "supermarket": [
        ("checkout counter", "a", SURFACE),
        ("display shelf", "a", SURFACE),
    ],
    "attic": [
        ("storage chest", "a", CLOSED),
        ("old trunk", "an", CLOSED),
    ],
    "basement": [
        ("utility shelf", "a", SURFACE),
        ("boiler", "a", FIXTURE),
    ],
    "cellar": [
        ("wine rack", "a", SURFACE),
    ],
    "dining room": [
        ("dining table", "a", SURFACE),
        ("sideboard", "a", SURFACE),
    ],
    "study": [
        ("writing desk", "a", SURFACE),
        ("filing cabinet", "a", CLOSED),
    ],
    "library": [
        ("reading table", "a", SURFACE),
        ("tall bookshelf", "a", SURFACE),
    ],
    "nursery": [
        ("crib", "a", FIXTURE),
        ("toy shelf", "a", SURFACE),
    ],
    "guest room": [
        ("guest bed", "a", SURFACE),
        ("luggage rack", "a", SURFACE),
    ],
    "closet": [
        ("clothes rail", "a", SURFACE),
    ],
    "hallway": [
        ("console table", "a", SURFACE),
    ],
    "porch": [
        ("rocking chair", "a", SURFACE),
    ],
    "balcony": [
        ("railing", "a", FIXTURE),
    ],
    "terrace": [
        ("deck chair", "a", SURFACE),
    ],
    "garden": [
        ("flower bed", "a", FIXTURE),
        ("garden table", "a", SURFACE),
    ],
    "greenhouse": [
        ("potting bench", "a", SURFACE),
    ],
    "shed": [
        ("tool rack", "a", SURFACE),
    ],
    "workshop": [
        ("work table", "a", SURFACE),
        ("tool chest", "a", CLOSED),
    ],
    "office": [
        ("office desk", "an", SURFACE),
        ("desk chair", "a", FIXTURE),
    ],
    "playroom": [
        ("toy chest", "a", CLOSED),
        ("play mat", "a", FIXTURE),
    ],
    "music room": [
        ("piano", "a", FIXTURE),
        ("music stand", "a", SURFACE),
    ],
    "sunroom": [
        ("wicker chair", "a", SURFACE),
    ],
    "utility room": [
        ("utility cupboard", "a", CLOSED),
        ("ironing board", "an", SURFACE),
    ],
    "mudroom": [
        ("boot tray", "a", SURFACE),
        ("coat hook", "a", FIXTURE),
    ],
    "patio": [
        ("picnic table", "a", SURFACE),
    ],
    "courtyard": [
        ("stone bench", "a", SURFACE),
    ],
    "gym": [
        ("exercise bench", "an", SURFACE),
        ("weight rack", "a", SURFACE),
    ],
    "sauna": [
        ("cedar bench", "a", SURFACE),
    ],
    "pool house": [
        ("towel shelf", "a", SURFACE),
    ],
    "wine cellar": [
        ("bottle rack", "a", SURFACE),
    ],
    "storage room": [
        ("metal shelf", "a", SURFACE),
        ("cardboard crate", "a", CLOSED),
    ],
    "lounge": [
        ("lounge chair", "a", SURFACE),
        ("drinks cabinet", "a", CLOSED),
    ],
    "den": [
        ("recliner", "a", SURFACE),
    ],
    "conservatory": [
        ("plant stand", "a", SURFACE),
    ],
    "veranda": [
        ("porch swing", "a", FIXTURE),
    ],
    "rooftop": [],
}
