from enum import Enum

class Observable(str, Enum):
    X  = "X"
    Y  = "Y"
    X2 = "X2"
    Y2 = "Y2"
    VX = "VX"
    VY = "VY"

    @property
    def is_second_moment(self) -> bool:
        return self in (Observable.X2, Observable.Y2)

    @property
    def is_velocity(self) -> bool:
        return self in (Observable.VX, Observable.VY)

ObservableList = list(Observable)


class UncertaintyPair(str, Enum):
    XP = "XP"
    YP = "YP"
    XV = "XV"
    YV = "YV"

    @property
    def position(self) -> Observable:
        return Observable.X if self in (UncertaintyPair.XP, UncertaintyPair.XV) else Observable.Y

    @property
    def second_moment(self) -> Observable:
        return Observable.X2 if self.position is Observable.X else Observable.Y2

    @property
    def velocity(self) -> Observable:
        return Observable.VX if self.position is Observable.X else Observable.VY

    @property
    def is_momentum(self) -> bool:
        return self in (UncertaintyPair.XP, UncertaintyPair.YP)

UncertaintyPairList = list(UncertaintyPair)
